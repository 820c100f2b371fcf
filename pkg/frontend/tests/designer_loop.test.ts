// End-to-end designer loop against the real service: scripted edits must
// re-interpolate and redraw within the latency budget, and every input
// marker must sit on the rendered curve to sub-marker pixel accuracy.

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { MotionForgeClient } from "../src/api.js";
import { DesignerController } from "../src/controller.js";
import { distanceToPolyline } from "../src/projection.js";
import { DrawPlan, MARKER_RADIUS } from "../src/render.js";
import { pointsTask, posesTask } from "../src/scene.js";
import { Vec3 } from "../src/types.js";
import { RunningService, startService } from "./service.js";

const SEVEN_POINTS: Vec3[] = [
  [-1.0, -0.6, 0.2], [-0.6, 0.3, -0.3], [0.0, -0.2, 0.5], [0.4, 0.6, -0.1],
  [0.9, -0.4, 0.3], [1.2, 0.5, 0.6], [1.6, -0.1, -0.4],
];

// Four poses sampled from a cubic motion (at t = inf, 1, 2, 3), so the
// interpolating families exist; full precision keeps them on the quadric.
const FOUR_POSES: number[][] = [
  [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
  [-2.798413159991963, -8.66906644448838, 4.680545665423933,
   -2.810553394813159, 3.9742596597195146, -3.5652082014291526,
   -6.106003565026833, -3.1289290863282404],
  [7.929631859833281, -23.015101924499522, 11.414899019258254,
   -7.8707614010873925, 7.7751673194112065, -2.587133449440986,
   -14.481629835137014, -5.6041576452271435],
  [34.71047455608058, -43.80624237163571, 21.76929842413202,
   -14.519862152307432, 11.576074979102899, -0.9843554630514779,
   -26.171047838698538, -8.594667025631745],
];

let service: RunningService;

beforeAll(async () => {
  service = await startService(8765 + Math.floor(Math.random() * 200));
}, 30000);

afterAll(() => {
  service?.stop();
});

function markersOnCurve(plan: DrawPlan): number {
  expect(plan.curve, "plan should carry a rendered curve").not.toBeNull();
  let worst = 0;
  for (const marker of plan.markers) {
    worst = Math.max(worst, distanceToPolyline(marker, plan.curve!));
  }
  return worst;
}

describe("designer loop", () => {
  it("re-interpolates and redraws a dragged via point within 100 ms", async () => {
    const client = new MotionForgeClient(service.url);
    const controller = new DesignerController(
      client, pointsTask("points7", SEVEN_POINTS));
    await controller.start();
    expect(markersOnCurve(controller.plan()!)).toBeLessThan(MARKER_RADIUS);

    // scripted drag: move via point 3 and wait for the rendered plan
    let renderedAt = 0;
    controller.onRender = () => (renderedAt = performance.now());
    const started = performance.now();
    await controller.editViaPoint(3, [0.5, 0.8, 0.1]);
    const elapsed = renderedAt - started;
    expect(elapsed).toBeGreaterThan(0);
    expect(elapsed).toBeLessThan(100);

    const plan = controller.plan()!;
    expect(controller.store.snapshot().dirty).toBe(false);
    expect(markersOnCurve(plan)).toBeLessThan(MARKER_RADIUS);
    // the report confirms the motion passes all 7 points numerically too
    const report = controller.store.snapshot().results!.report;
    expect(report.max_residual!).toBeLessThan(1e-6);
  }, 20000);

  it("coalesces a burst of drag events into one fresh result", async () => {
    const client = new MotionForgeClient(service.url);
    const controller = new DesignerController(
      client, pointsTask("points7", SEVEN_POINTS));
    await controller.start();
    const first = controller.editViaPoint(2, [0.1, 0.1, 0.1]);
    const second = controller.editViaPoint(2, [0.2, 0.2, 0.2]);
    const third = controller.editViaPoint(2, [0.25, -0.15, 0.3]);
    await Promise.all([first, second, third]);
    const points = controller.store.task.task.points!;
    expect(points[2]).toEqual([0.25, -0.15, 0.3]);
    expect(markersOnCurve(controller.plan()!)).toBeLessThan(MARKER_RADIUS);
  }, 20000);

  it("surfaces singular edits as a banner and keeps the ghost curve", async () => {
    const client = new MotionForgeClient(service.url);
    const controller = new DesignerController(
      client, pointsTask("points7", SEVEN_POINTS));
    await controller.start();
    let banner: string | null = null;
    controller.onBanner = (code) => (banner = code);
    // drag point 1 exactly onto point 0
    await controller.editViaPoint(1, SEVEN_POINTS[0]);
    expect(banner).toBe("SINGULAR_DIFFERENCE");
    const state = controller.store.snapshot();
    expect(state.results).toBeNull();
    expect(state.ghost).not.toBeNull();
    const plan = controller.plan()!;
    const greyedCurve = plan.primitives.find((p) => p.kind === "polyline");
    expect(greyedCurve && greyedCurve.kind === "polyline" && greyedCurve.greyed)
      .toBe(true);
    // undo restores the previous, valid task
    await controller.undo();
    expect(controller.store.snapshot().errorBanner).toBeNull();
    expect(markersOnCurve(controller.plan()!)).toBeLessThan(MARKER_RADIUS);
  }, 20000);

  it("keeps all 4 pose glyphs on the curve across a lambda sweep", async () => {
    const client = new MotionForgeClient(service.url);
    const controller = new DesignerController(
      client, posesTask(FOUR_POSES, undefined, "k1"));
    await controller.start();
    expect(markersOnCurve(controller.plan()!)).toBeLessThan(MARKER_RADIUS);

    const curves: string[] = [];
    for (const lambda of [6.5, 9.0, 13.0, -8.0]) {
      await controller.adjustFamily(lambda, "k1");
      const plan = controller.plan()!;
      expect(markersOnCurve(plan)).toBeLessThan(MARKER_RADIUS);
      curves.push(JSON.stringify(plan.curve!.slice(0, 40)));
    }
    // the sweep genuinely moves the curve
    expect(new Set(curves).size).toBe(curves.length);

    // the other branch interpolates too, with a different cubic
    await controller.adjustFamily(undefined, "k2");
    expect(markersOnCurve(controller.plan()!)).toBeLessThan(MARKER_RADIUS);
  }, 30000);

  it("scrubbing puts the frame triad on the via markers", async () => {
    const client = new MotionForgeClient(service.url);
    const controller = new DesignerController(
      client, pointsTask("points7", SEVEN_POINTS));
    await controller.start();
    for (const k of [0, 3, 6]) {
      await controller.scrub(k / 6);
      const plan = controller.plan()!;
      const triad = plan.primitives.find((p) => p.kind === "triad");
      expect(triad).toBeDefined();
      if (triad && triad.kind === "triad") {
        const marker = plan.markers[k];
        const gap = Math.hypot(triad.origin[0] - marker[0],
                               triad.origin[1] - marker[1]);
        expect(gap).toBeLessThan(1.0);
      }
    }
  }, 20000);

  it("synthesizes a six-bar loop for the cubic motion", async () => {
    const client = new MotionForgeClient(service.url);
    const controller = new DesignerController(
      client, pointsTask("points7", SEVEN_POINTS));
    await controller.start();
    await controller.synthesize();
    const state = controller.store.snapshot();
    expect(state.mechanism).not.toBeNull();
    expect(state.mechanism!.mechanisms.length).toBeGreaterThan(0);
    expect(state.mechanism!.mechanisms[0].joints.length).toBe(6);
    const plan = controller.plan()!;
    const segments = plan.primitives.filter((p) => p.kind === "segment");
    // 6 axis strokes plus the 6 skeleton edges
    expect(segments.length).toBe(12);
  }, 20000);
});
