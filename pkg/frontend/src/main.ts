// Browser bootstrap: canvas, pointer dragging of via points, family slider,
// scrubber, and the non-blocking error banner.

import { MotionForgeClient } from "./api.js";
import { DesignerController } from "./controller.js";
import { unproject } from "./projection.js";
import { MARKER_RADIUS, paint } from "./render.js";
import { markerWorldPositions } from "./render.js";
import { pointsTask } from "./scene.js";
import { Branch, Vec3 } from "./types.js";

const SERVICE_URL =
  new URLSearchParams(window.location.search).get("service") ??
  "http://127.0.0.1:8720";

const DEFAULT_POINTS: Vec3[] = [
  [-1.0, -0.6, 0.2], [-0.6, 0.3, -0.3], [0.0, -0.2, 0.5], [0.4, 0.6, -0.1],
  [0.9, -0.4, 0.3], [1.2, 0.5, 0.6], [1.6, -0.1, -0.4],
];

function setup(): void {
  const canvas = document.getElementById("scene") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d")!;
  const banner = document.getElementById("banner")!;
  const status = document.getElementById("status")!;
  const scrub = document.getElementById("scrub") as HTMLInputElement;
  const lambdaSlider = document.getElementById("lambda") as HTMLInputElement;
  const branchToggle = document.getElementById("branch") as HTMLSelectElement;
  const schemeSelect = document.getElementById("scheme") as HTMLSelectElement;
  const synthesize = document.getElementById("synthesize") as HTMLButtonElement;
  const undoButton = document.getElementById("undo") as HTMLButtonElement;

  const client = new MotionForgeClient(SERVICE_URL);
  const controller = new DesignerController(
    client, pointsTask("points7", DEFAULT_POINTS),
    { width: canvas.width, height: canvas.height });

  controller.onRender = (plan) => {
    paint(ctx, plan);
    const report = controller.store.snapshot().results?.report;
    status.textContent = report
      ? `max residual ${report.max_residual?.toExponential(2) ?? "inf"}  `
        + `study ${report.study_residue.toExponential(2)}`
      : "recomputing...";
  };
  controller.onBanner = (code) => {
    banner.textContent = code ? `service: ${code} (showing last valid motion)` : "";
    banner.style.display = code ? "block" : "none";
  };

  let dragging: number | null = null;

  canvas.addEventListener("pointerdown", (event) => {
    const rect = canvas.getBoundingClientRect();
    const x = event.clientX - rect.left;
    const y = event.clientY - rect.top;
    const plan = controller.plan();
    if (!plan) return;
    plan.markers.forEach(([mx, my], index) => {
      if (Math.hypot(mx - x, my - y) <= MARKER_RADIUS + 3) dragging = index;
    });
    if (dragging !== null) canvas.setPointerCapture(event.pointerId);
  });

  canvas.addEventListener("pointermove", (event) => {
    if (dragging === null) return;
    const rect = canvas.getBoundingClientRect();
    const x = event.clientX - rect.left;
    const y = event.clientY - rect.top;
    const anchors = markerWorldPositions(controller.store.snapshot());
    const world = unproject(controller.camera, x, y, anchors[dragging]);
    if (controller.store.task.task.points) {
      void controller.editViaPoint(dragging, world);
    }
  });

  const releaseDrag = () => { dragging = null; };
  canvas.addEventListener("pointerup", releaseDrag);
  canvas.addEventListener("pointercancel", releaseDrag);

  scrub.addEventListener("input", () => {
    void controller.scrub(parseFloat(scrub.value));
  });

  const applyFamily = () => {
    if (controller.store.task.task.kind !== "poses4") return;
    void controller.adjustFamily(
      parseFloat(lambdaSlider.value), branchToggle.value as Branch);
  };
  lambdaSlider.addEventListener("input", applyFamily);
  branchToggle.addEventListener("change", applyFamily);

  schemeSelect.addEventListener("change", () => {
    if (schemeSelect.value === "points5") {
      void controller.loadTask(pointsTask("points5", DEFAULT_POINTS.slice(0, 5)));
    } else {
      void controller.loadTask(pointsTask("points7", DEFAULT_POINTS));
    }
  });

  synthesize.addEventListener("click", () => void controller.synthesize());
  undoButton.addEventListener("click", () => void controller.undo());

  void client.health().then((ok) => {
    if (!ok) {
      banner.textContent =
        `cannot reach the motionforge service at ${SERVICE_URL}; ` +
        "start it with: motionforge serve";
      banner.style.display = "block";
      return;
    }
    void controller.start();
  });
}

window.addEventListener("DOMContentLoaded", setup);
