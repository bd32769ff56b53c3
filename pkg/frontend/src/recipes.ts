import type { Manifest } from "./csv.js";

export type Dash = "solid" | "dashed" | "dotted";

export interface FigureRecipe {
  figureId: string;
  title: string;
  xLabel: string;
  yLabel: string;
  logY: boolean;
  /** Legend label and dash pattern per series name. */
  style(seriesName: string): { label: string; dash: Dash };
}

function dashForProvenance(provenance: string | undefined, name: string): Dash {
  if (name === "ideal") return "dotted";
  if (provenance === "analytic" || provenance === "bound") return "dashed";
  return "solid"; // simulated (and anything unlisted)
}

function defaultLabel(name: string): string {
  if (name === "bj_analytic") return "BJ";
  const r = name.match(/^(?:continuous|trotter)_r(\d+)$/);
  if (r) return `r=${r[1]}`;
  const run = name.match(/^noisy_run_(\d+)$/);
  if (run) return `run ${run[1]}`;
  const eps = name.match(/^meandev_eps_(\d+)p(\d+)$/);
  if (eps) return `eps=${eps[1]}.${eps[2]}`;
  const fin = name.match(/^finite_bj_R(\d+)$/);
  if (fin) return `R=${fin[1]}`;
  const bound = name.match(/^bound_2gamma_R(\d+)$/);
  if (bound) return `2*Gamma (R=${bound[1]})`;
  return name;
}

const AXES: Record<string, { x: string; y: string; logY?: boolean }> = {
  fig2a: { x: "time", y: "F" },
  fig2b: { x: "time", y: "F" },
  fig2c: { x: "iterate", y: "F" },
  fig2d: { x: "iterate", y: "F" },
  fig4a: { x: "iterate", y: "F" },
  fig4b: { x: "iterate", y: "deltaF" },
  fig5a: { x: "time", y: "|a|^2", logY: false },
  fig5b: { x: "time", y: "|a|^2", logY: true },
  fig6a: { x: "iterate", y: "F" },
  fig6b: { x: "sequence length l", y: "deltaF" },
};

export function recipeFor(manifest: Manifest): FigureRecipe {
  const id = manifest.figure_id;
  const axes = AXES[id] ?? { x: "abscissa", y: "value" };
  return {
    figureId: id,
    title: id,
    xLabel: axes.x,
    yLabel: axes.y,
    logY: axes.logY ?? false,
    style(name: string) {
      return {
        label: defaultLabel(name),
        dash: dashForProvenance(manifest.series?.[name], name),
      };
    },
  };
}
