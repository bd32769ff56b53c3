#!/usr/bin/env node
/** CLI: render --dir PATH --out FILE
 *
 * Reads a figure directory written by the experiments CLI (CSV series plus
 * manifest.json) and writes a deterministic SVG line chart.  Every CSV in
 * the directory is either plotted or listed as skipped in the render log.
 */
import { parseArgs } from "node:util";
import { writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import { readFigureDir, ParseError, UsageError, type Series } from "./csv.js";
import { recipeFor } from "./recipes.js";
import { renderSvg } from "./svg.js";

const USAGE = "usage: render --dir PATH --out FILE";

export function main(argv: string[]): number {
  let dir: string | undefined;
  let out: string | undefined;
  try {
    const { values } = parseArgs({
      args: argv,
      options: { dir: { type: "string" }, out: { type: "string" } },
    });
    dir = values.dir;
    out = values.out;
  } catch (err) {
    console.error(`${(err as Error).message}\n${USAGE}`);
    return 2;
  }
  if (!dir || !out) {
    console.error(USAGE);
    return 2;
  }

  try {
    const bundle = readFigureDir(dir);
    const recipe = recipeFor(bundle.manifest);
    const plotted: Series[] = [];
    for (const s of bundle.series) {
      if (s.abscissa.length < 2) {
        console.log(`skipped ${s.name} (${s.abscissa.length} point(s), need >= 2)`);
        continue;
      }
      plotted.push(s);
      console.log(`plotted ${s.name} (${s.abscissa.length} points)`);
    }
    if (plotted.length === 0) {
      console.error(`no plottable series in ${dir}`);
      return 1;
    }
    writeFileSync(out, renderSvg({ manifest: bundle.manifest, series: plotted }, recipe));
    console.log(`wrote ${out} (${plotted.length} series)`);
    return 0;
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(`${err.message}\n${USAGE}`);
      return 2;
    }
    if (err instanceof ParseError) {
      console.error(err.message);
      return 1;
    }
    throw err;
  }
}

if (import.meta.url === pathToFileURL(process.argv[1] ?? "").href) {
  process.exit(main(process.argv.slice(2)));
}
