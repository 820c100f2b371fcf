// Designer loop: edits mark the scene dirty and schedule a debounced
// re-interpolation; responses are tagged with the task revision they were
// requested for and discarded when stale; every successful refresh rebuilds
// the draw plan and hands it to the renderer callback.
//
// The controller is DOM-free so the designer loop can run headless in tests.

import { MotionForgeClient } from "./api.js";
import { Camera, defaultCamera } from "./projection.js";
import { buildDrawPlan, DrawPlan } from "./render.js";
import { SceneResults, SceneStore } from "./scene.js";
import {
  Branch,
  MotionDocument,
  PoseSample,
  ServiceError,
  TaskDocument,
  Vec3,
} from "./types.js";


export interface ControllerOptions {
  debounceMs?: number;
  curveSamples?: number;
  width?: number;
  height?: number;
}

const DEFAULT_DEBOUNCE_MS = 30;

function sweepRange(motion: MotionDocument): [number, number] {
  const times = (motion.provenance?.via_times ?? []).filter(
    (t): t is number => t !== null,
  );
  if (times.length === 0) return [0, 1];
  const lo = Math.min(...times, 0);
  const hi = Math.max(...times, 1);
  const pad = motion.provenance?.scheme?.startsWith("poses")
    ? 0.35 * (hi - lo) + 0.5
    : 0;
  return [lo - pad, hi + pad];
}

/** Extra parameters toward t = +/-inf so pose schemes show the curve
 *  approaching the pose interpolated at the infinite node. */
function asymptoteTail(range: [number, number]): number[] {
  const spread = Math.max(range[1] - range[0], 1);
  const tail: number[] = [];
  for (const factor of [2, 4, 8, 16, 32, 64, 128]) {
    tail.push(range[0] - factor * spread);
    tail.push(range[1] + factor * spread);
  }
  return tail;
}

export class DesignerController {
  readonly store: SceneStore;
  readonly camera: Camera;
  onRender: ((plan: DrawPlan) => void) | null = null;
  onBanner: ((code: string | null) => void) | null = null;

  private readonly client: MotionForgeClient;
  private readonly debounceMs: number;
  private readonly curveSamples: number;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private waiters: Array<() => void> = [];
  private lastPlan: DrawPlan | null = null;

  constructor(client: MotionForgeClient, task: TaskDocument,
              options: ControllerOptions = {}) {
    this.client = client;
    this.store = new SceneStore(task);
    this.debounceMs = options.debounceMs ?? DEFAULT_DEBOUNCE_MS;
    this.curveSamples = options.curveSamples ?? 240;
    this.camera = defaultCamera(options.width ?? 900, options.height ?? 640);
  }

  plan(): DrawPlan | null {
    return this.lastPlan;
  }

  /** Initial interpolation; resolves when the first plan is rendered. */
  start(): Promise<void> {
    return this.scheduleRefresh(0);
  }

  editViaPoint(index: number, position: Vec3): Promise<void> {
    this.store.editViaPoint(index, position);
    this.redrawNow();
    return this.scheduleRefresh(this.debounceMs);
  }

  adjustFamily(lambda: number | undefined, branch: Branch): Promise<void> {
    this.store.adjustFamily(lambda, branch);
    this.redrawNow();
    return this.scheduleRefresh(this.debounceMs);
  }

  loadTask(task: TaskDocument): Promise<void> {
    this.store.loadTask(task);
    this.redrawNow();
    return this.scheduleRefresh(0);
  }

  undo(): Promise<void> {
    if (!this.store.undo()) return Promise.resolve();
    this.redrawNow();
    return this.scheduleRefresh(0);
  }

  async scrub(t: number): Promise<void> {
    this.store.setScrub(t);
    const state = this.store.snapshot();
    if (!state.results) {
      this.redrawNow();
      return;
    }
    const revision = state.revision;
    const sampled = await this.client.sampleAt(state.results.motion, [t]);
    const row = sampled.samples[0];
    // a singular parameter hides the frame at this tick
    this.store.setScrubPose(revision, row && !row.singular ? row : null);
    this.redrawNow();
  }

  /** Synthesize linkages for the current motion and add them to the scene. */
  async synthesize(): Promise<void> {
    const state = this.store.snapshot();
    if (!state.results) return;
    const revision = state.revision;
    const result = await this.client.factorize(state.results.motion);
    this.store.applyMechanism(revision, result);
    this.redrawNow();
  }

  private redrawNow(): void {
    this.lastPlan = buildDrawPlan(this.store.snapshot(), this.camera);
    this.onRender?.(this.lastPlan);
  }

  private scheduleRefresh(delay: number): Promise<void> {
    if (this.timer !== null) clearTimeout(this.timer);
    const done = new Promise<void>((resolve) => this.waiters.push(resolve));
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.refresh();
    }, delay);
    return done;
  }

  private settleWaiters(): void {
    const waiters = this.waiters;
    this.waiters = [];
    waiters.forEach((resolve) => resolve());
  }

  private async refresh(): Promise<void> {
    const revision = this.store.revision;
    const task = this.store.task;
    try {
      const { motion, report } = await this.client.interpolate(task);
      const range = sweepRange(motion);
      const sweep = await this.client.sampleSweep(motion, this.curveSamples, range);
      let curve: PoseSample[] = sweep.samples;
      if (task.task.kind.startsWith("poses")) {
        const tail = await this.client.sampleAt(motion, asymptoteTail(range));
        curve = [...tail.samples, ...sweep.samples].sort((a, b) => a.t - b.t);
      }
      curve = curve.filter((sample) => !sample.singular);
      const results: SceneResults = { motion, report, curve, scrubPose: null };
      if (this.store.applyResults(revision, results)) {
        this.onBanner?.(null);
        this.redrawNow();
      }
    } catch (err) {
      const code = err instanceof ServiceError ? err.code : "INTERNAL";
      if (this.store.applyError(revision, code)) {
        this.onBanner?.(code);
        this.redrawNow();
      }
    } finally {
      this.settleWaiters();
    }
  }
}
