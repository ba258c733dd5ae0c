/** Payload shapes mirrored from the /api/v1 JSON contract. */

export interface NumberWithDisplay {
  value: number | null;
  display: string;
}

export interface DocumentStep {
  kind: "math" | "text";
  template: string;
  values: Record<string, number | number[] | null>;
  display: string;
}

export interface DocumentSection {
  title: string;
  steps: DocumentStep[];
}

export interface DerivationDocument {
  sections: DocumentSection[];
}

export interface PlotPayload {
  grid: number[];
  values: number[];
  shaded: [number, number][];
  is_discrete: boolean;
  marker: number | null;
}

export interface CatalogParam {
  name: string;
  description: string;
  constraint: string;
}

export interface CatalogEntry {
  tag: string;
  name: string;
  discrete: boolean;
  params: CatalogParam[];
  support: string;
  notes?: string;
}

export interface Catalog {
  distributions: CatalogEntry[];
}

export interface MomentsPayload {
  mean: NumberWithDisplay | null;
  sd: NumberWithDisplay | null;
  variance: NumberWithDisplay | null;
}

export interface ProbabilityResponse {
  distribution: { tag: string; params: Record<string, number> };
  query: Record<string, unknown>;
  probability: NumberWithDisplay;
  moments: MomentsPayload;
  derivation: DerivationDocument;
  plot: PlotPayload;
}

export interface SettingDescriptor {
  tag: string;
  name: string;
  samples: number;
  sample_kinds: string[];
  options: string[];
  h0: string;
  alternatives: string[];
}

export interface SettingsResponse {
  settings: SettingDescriptor[];
}

export interface SampleStatsPayload {
  kind: string;
  n: number;
  mean?: NumberWithDisplay;
  sd?: NumberWithDisplay;
  variance?: NumberWithDisplay;
  p_hat?: NumberWithDisplay;
  successes?: number;
}

export interface InferenceResponse {
  setting: string;
  summary_stats: SampleStatsPayload[];
  diff_stats: SampleStatsPayload | null;
  ci: {
    lower: number | null;
    upper: number | null;
    lower_display: string;
    upper_display: string;
    level: number;
    sidedness: string;
  };
  statistic: NumberWithDisplay;
  statistic_family: {
    kind: string;
    label: string;
    df: number | null;
    df1: number | null;
    df2: number | null;
  };
  critical_values: NumberWithDisplay[];
  p_value: NumberWithDisplay;
  decision: "reject" | "fail_to_reject";
  h0_value: NumberWithDisplay;
  estimate: NumberWithDisplay | null;
  std_error: NumberWithDisplay | null;
  warnings: string[];
  interpretation: string;
  narrative: DerivationDocument;
  plot: PlotPayload;
}

export interface RegressionTableRow {
  term: string;
  estimate: number;
  std_error: number | null;
  t: number | null;
  p: number | null;
}

export interface RegressionResponse {
  fit: {
    n: number;
    beta0: NumberWithDisplay;
    beta1: NumberWithDisplay;
    se_beta0: NumberWithDisplay | null;
    se_beta1: NumberWithDisplay | null;
    t0: NumberWithDisplay | null;
    t1: NumberWithDisplay | null;
    p0: NumberWithDisplay | null;
    p1: NumberWithDisplay | null;
    sigma_hat: NumberWithDisplay;
    df_resid: number;
    r_squared: NumberWithDisplay;
    adj_r_squared: NumberWithDisplay;
    x_mean: NumberWithDisplay;
    y_mean: NumberWithDisplay;
    fitted: number[];
    residuals: number[];
    degenerate: boolean;
  };
  derivation: DerivationDocument;
  table: {
    rows: RegressionTableRow[];
    sigma_hat: number;
    df_resid: number;
    r_squared: number;
    adj_r_squared: number;
    degenerate: boolean;
  };
  band: {
    grid: number[];
    fit: number[];
    lower: number[];
    upper: number[];
    level: number;
  } | null;
  diagnostics: {
    residuals_vs_fitted: [number, number][];
    qq_points: [number, number][];
    scale_location: [number, number][];
    leverage: number[];
    cooks_distance: (number | null)[];
    standardized_residuals: (number | null)[];
  } | null;
  interpretation: string;
}
