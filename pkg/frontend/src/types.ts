// Wire types for the /api/v1 endpoints. All numbers arrive at full
// precision; the UI never recomputes a score, only formats what it gets.

export interface CriterionSpec {
  id: string;
  label: string;
  scale_min: number;
  scale_max: number;
  levels?: [string, number][];
}

export interface WorkspaceSummary {
  criteria: CriterionSpec[];
  population: string[];
  capacities: string[];
  class_models: string[];
  model_classes: Record<string, string[]>;
  devices: string[];
}

export interface ShapleyResponse {
  capacity: string;
  shapley: Record<string, number>;
  interactions: [string, string, number][];
}

export interface RankRow {
  rank: number;
  id: string;
  score: number;
}

export interface RankResult {
  horizon: number;
  ranking: RankRow[];
}

export interface TeamResult {
  members: string[];
  objective: number;
  method_used: string;
  team_vector: Record<string, number>;
}

export interface ClassifyProfile {
  id: string;
  degrees: Record<string, number>;
  assigned: string[];
  distances: Record<string, number>;
}

export interface ClassifyResult {
  model: string;
  profiles: ClassifyProfile[];
  minorities?: string[];
}

export interface GapResult {
  profile: string;
  class: string;
  required: Record<string, number>;
  deficits: Record<string, number>;
  time_to_ready: number | null;
  unreachable: boolean;
  reachable_within?: boolean;
  reachable_with_full_motivation: boolean;
}

export interface DeviceResult {
  device: string;
  per_function: Record<string, number>;
  per_individual: Record<string, number>;
}

export type AnalysisResult =
  | RankResult
  | TeamResult
  | ClassifyResult
  | GapResult
  | DeviceResult;

export interface WhatIfResponse {
  analysis: string;
  result: AnalysisResult;
}

export interface Violation {
  rule: string;
  subject: string;
  message: string;
}

export interface ApiError {
  error: string;
  violations: Violation[];
}
