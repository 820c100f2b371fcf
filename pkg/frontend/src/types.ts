// Document shapes of the motionforge HTTP API (schema_version "1").

export type Vec3 = [number, number, number];

export type SchemeKind = "points5" | "points7" | "pointsGeneric" | "poses3" | "poses4";

export type Branch = "k1" | "k2";

export interface TaskOptions {
  lambda?: number;
  branch?: Branch;
}

export interface ViaTaskDoc {
  kind: SchemeKind;
  points?: Vec3[];
  poses?: number[][];
  via_times?: number[];
  secondary_times?: number[];
}

export interface TaskDocument {
  schema_version: "1";
  task: ViaTaskDoc;
  options?: TaskOptions;
}

export interface BezierDoc {
  weights: number[][];
  control_points: number[][];
}

export interface MotionDocument {
  schema_version: "1";
  degree: number;
  primal: number[][];
  dual: number[][];
  bezier?: BezierDoc;
  provenance?: {
    scheme: SchemeKind;
    // null marks the infinite node of the pose schemes
    via_times: (number | null)[];
  };
}

export interface InterpolationReport {
  residuals: (number | null)[];
  max_residual: number | null;
  study_residue: number;
  tolerance: number;
  ok: boolean;
}

export interface InterpolateResponse {
  schema_version: "1";
  motion: MotionDocument;
  report: InterpolationReport;
}

export interface JointAxisDoc {
  direction: Vec3;
  moment: Vec3;
}

export interface FactorizationDoc {
  order: number[];
  roots: number[][];
  axes: JointAxisDoc[];
  reconstruction_error: number;
}

export interface MechanismDoc {
  pair: [number, number];
  joints: JointAxisDoc[];
}

export interface FactorizeResponse {
  schema_version: "1";
  degree: number;
  factorizations: FactorizationDoc[];
  mechanisms: MechanismDoc[];
}

export interface PoseSample {
  t: number;
  rotation: [Vec3, Vec3, Vec3];
  translation: Vec3;
  singular?: boolean;
}

export interface GapSample {
  t: number;
  singular: true;
}

export interface SampleResponse {
  schema_version: "1";
  samples: PoseSample[];
}

export interface ServiceErrorBody {
  schema_version: "1";
  error: { code: string; message: string };
}

export class ServiceError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.code = code;
    this.status = status;
  }
}
