// Scene state: the editable task, the last results, and the dirty flag.
//
// Invariant: whenever the task changes, `motion` and `mechanism` are cleared
// and `revision` bumps, so stale service responses can never be rendered as
// current. The last valid motion is kept separately for greyed display.

import {
  Branch,
  FactorizeResponse,
  MotionDocument,
  InterpolationReport,
  PoseSample,
  TaskDocument,
  Vec3,
} from "./types.js";

export interface SceneResults {
  motion: MotionDocument;
  report: InterpolationReport;
  curve: PoseSample[];
  scrubPose: PoseSample | null;
}

export interface SceneState {
  task: TaskDocument;
  revision: number;
  dirty: boolean;
  results: SceneResults | null;
  ghost: SceneResults | null;
  mechanism: FactorizeResponse | null;
  scrubT: number;
  errorBanner: string | null;
}

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

export function pointsTask(kind: "points5" | "points7", points: Vec3[]): TaskDocument {
  return { schema_version: "1", task: { kind, points: clone(points) } };
}

export function posesTask(poses: number[][], lambda?: number, branch: Branch = "k1"): TaskDocument {
  const doc: TaskDocument = {
    schema_version: "1",
    task: { kind: "poses4", poses: clone(poses) },
    options: { branch },
  };
  if (lambda !== undefined) doc.options!.lambda = lambda;
  return doc;
}

export class SceneStore {
  private state: SceneState;
  private history: TaskDocument[] = [];

  constructor(task: TaskDocument) {
    this.state = {
      task,
      revision: 0,
      dirty: true,
      results: null,
      ghost: null,
      mechanism: null,
      scrubT: 0,
      errorBanner: null,
    };
  }

  snapshot(): SceneState {
    return this.state;
  }

  get task(): TaskDocument {
    return this.state.task;
  }

  get revision(): number {
    return this.state.revision;
  }

  /** Replace the task wholesale (scheme switch); clears results. */
  loadTask(task: TaskDocument): void {
    this.pushHistory();
    this.mutateTask(() => task);
  }

  /** Move one via point; marks the scene dirty. */
  editViaPoint(index: number, position: Vec3): void {
    const points = this.state.task.task.points;
    if (!points || index < 0 || index >= points.length) {
      throw new RangeError(`via point index ${index} out of range`);
    }
    this.pushHistory();
    this.mutateTask((task) => {
      task.task.points![index] = [position[0], position[1], position[2]];
      return task;
    });
  }

  /** Tune the 4-pose family: slider for lambda, toggle for the branch. */
  adjustFamily(lambda: number | undefined, branch: Branch): void {
    if (this.state.task.task.kind !== "poses4") {
      throw new Error("family controls apply to the poses4 scheme only");
    }
    this.pushHistory();
    this.mutateTask((task) => {
      task.options = task.options ?? {};
      task.options.branch = branch;
      if (lambda === undefined) {
        delete task.options.lambda;
      } else {
        task.options.lambda = lambda;
      }
      return task;
    });
  }

  /** Restore the previous task state exactly. */
  undo(): boolean {
    const previous = this.history.pop();
    if (!previous) return false;
    this.mutateTask(() => previous, false);
    return true;
  }

  private pushHistory(): void {
    this.history.push(clone(this.state.task));
  }

  private mutateTask(edit: (task: TaskDocument) => TaskDocument, _record = true): void {
    const next = edit(clone(this.state.task));
    const hadResults = this.state.results ?? this.state.ghost;
    this.state = {
      ...this.state,
      task: next,
      revision: this.state.revision + 1,
      dirty: true,
      results: null,
      ghost: hadResults ? clone(hadResults) : null,
      mechanism: null,
    };
  }

  /** Install results for a revision; ignored when stale. */
  applyResults(revision: number, results: SceneResults): boolean {
    if (revision !== this.state.revision) return false;
    this.state = {
      ...this.state,
      dirty: false,
      results,
      ghost: null,
      errorBanner: null,
    };
    return true;
  }

  applyError(revision: number, code: string): boolean {
    if (revision !== this.state.revision) return false;
    // keep the ghost visible, greyed, with a non-blocking banner
    this.state = { ...this.state, dirty: false, errorBanner: code };
    return true;
  }

  applyMechanism(revision: number, mech: FactorizeResponse): boolean {
    if (revision !== this.state.revision) return false;
    this.state = { ...this.state, mechanism: mech };
    return true;
  }

  setScrub(t: number): void {
    this.state = { ...this.state, scrubT: t };
  }

  setScrubPose(revision: number, pose: PoseSample | null): boolean {
    if (revision !== this.state.revision || !this.state.results) return false;
    this.state = {
      ...this.state,
      results: { ...this.state.results, scrubPose: pose },
    };
    return true;
  }
}
