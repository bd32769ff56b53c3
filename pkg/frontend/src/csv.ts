import { readFileSync, readdirSync, existsSync } from "node:fs";
import { join, basename } from "node:path";

export interface Series {
  name: string;
  file: string;
  abscissa: number[];
  value: number[];
  stderr?: number[];
}

export interface Manifest {
  figure_id: string;
  tool_version: string;
  seed: number;
  config: Record<string, unknown>;
  series: Record<string, string>; // name -> provenance (simulated|analytic|bound)
  duration_s: number;
}

export class UsageError extends Error {}
export class ParseError extends Error {}

const HEADERS = ["abscissa,value", "abscissa,value,stderr"];

export function parseSeriesCsv(text: string, file: string): Series {
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines.length < 2) {
    throw new ParseError(`${file}: expected a header and at least one row`);
  }
  const header = lines[0];
  if (!HEADERS.includes(header)) {
    throw new ParseError(`${file}: unrecognized header "${header}"`);
  }
  const cols = header.split(",").length;
  const abscissa: number[] = [];
  const value: number[] = [];
  const stderr: number[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== cols) {
      throw new ParseError(`${file}: row ${i + 1} has ${parts.length} fields, expected ${cols}`);
    }
    const nums = parts.map(Number);
    if (nums.some((v) => !Number.isFinite(v))) {
      throw new ParseError(`${file}: row ${i + 1} is not numeric: "${lines[i]}"`);
    }
    abscissa.push(nums[0]);
    value.push(nums[1]);
    if (cols === 3) stderr.push(nums[2]);
  }
  const name = basename(file).replace(/\.csv$/, "");
  return cols === 3 ? { name, file, abscissa, value, stderr } : { name, file, abscissa, value };
}

export interface FigureBundle {
  manifest: Manifest;
  series: Series[];
}

export function readFigureDir(dir: string): FigureBundle {
  const manifestPath = join(dir, "manifest.json");
  if (!existsSync(manifestPath)) {
    throw new UsageError(`no manifest.json in ${dir}`);
  }
  let manifest: Manifest;
  try {
    manifest = JSON.parse(readFileSync(manifestPath, "utf8")) as Manifest;
  } catch (err) {
    throw new ParseError(`${manifestPath}: ${(err as Error).message}`);
  }
  const files = readdirSync(dir).filter((f) => f.endsWith(".csv")).sort();
  if (files.length === 0) {
    throw new UsageError(`no CSV series in ${dir}`);
  }
  const series = files.map((f) =>
    parseSeriesCsv(readFileSync(join(dir, f), "utf8"), join(dir, f)),
  );
  return { manifest, series };
}
