// Builds a declarative draw plan from the scene, then paints it on a canvas.
// Tests consume the plan directly; the browser paints it.

import { Camera, poseOrigin, project } from "./projection.js";
import { SceneState } from "./scene.js";
import { JointAxisDoc, PoseSample, Vec3 } from "./types.js";

export const MARKER_RADIUS = 6;
export const VIA_POINT_COLOR = "#8b3fc6"; // purple via-point markers

export interface PolylinePrimitive {
  kind: "polyline";
  points: [number, number][];
  color: string;
  width: number;
  greyed: boolean;
}

export interface MarkerPrimitive {
  kind: "marker";
  at: [number, number];
  radius: number;
  color: string;
  label: string;
}

export interface SegmentPrimitive {
  kind: "segment";
  from: [number, number];
  to: [number, number];
  color: string;
  width: number;
}

export interface TriadPrimitive {
  kind: "triad";
  origin: [number, number];
  axes: [number, number][]; // endpoints of the x/y/z axis strokes
}

export interface BannerPrimitive {
  kind: "banner";
  text: string;
}

export type Primitive =
  | PolylinePrimitive
  | MarkerPrimitive
  | SegmentPrimitive
  | TriadPrimitive
  | BannerPrimitive;

export interface DrawPlan {
  primitives: Primitive[];
  curve: [number, number][] | null;
  markers: [number, number][];
}

function axisPoint(axis: JointAxisDoc): Vec3 {
  const [dx, dy, dz] = axis.direction;
  const [mx, my, mz] = axis.moment;
  return [dy * mz - dz * my, dz * mx - dx * mz, dx * my - dy * mx];
}

function curveOf(samples: PoseSample[], camera: Camera): [number, number][] {
  return samples.map((s) => project(camera, s.translation));
}

function triadOf(pose: PoseSample, camera: Camera, size = 0.35): TriadPrimitive {
  const origin = pose.translation;
  const axes: [number, number][] = [];
  for (let column = 0; column < 3; column++) {
    const tip: Vec3 = [
      origin[0] + size * pose.rotation[0][column],
      origin[1] + size * pose.rotation[1][column],
      origin[2] + size * pose.rotation[2][column],
    ];
    axes.push(project(camera, tip));
  }
  return { kind: "triad", origin: project(camera, origin), axes };
}

/** Marker positions for the editable inputs: via points, or pose origins. */
export function markerWorldPositions(state: SceneState): Vec3[] {
  const task = state.task.task;
  if (task.points) return task.points.map((p) => [p[0], p[1], p[2]]);
  if (task.poses) return task.poses.map(poseOrigin);
  return [];
}

export function buildDrawPlan(state: SceneState, camera: Camera): DrawPlan {
  const primitives: Primitive[] = [];
  const active = state.results ?? state.ghost;
  const greyed = state.results === null;
  let curve: [number, number][] | null = null;

  if (active) {
    curve = curveOf(active.curve, camera);
    primitives.push({
      kind: "polyline",
      points: curve,
      color: greyed ? "#b9b9c4" : "#2b6cb0",
      width: 2,
      greyed,
    });
    if (active.scrubPose && !greyed) {
      primitives.push(triadOf(active.scrubPose, camera));
    }
  }

  const markers: [number, number][] = [];
  const isPoseTask = !state.task.task.points;
  markerWorldPositions(state).forEach((w, index) => {
    const at = project(camera, w);
    markers.push(at);
    primitives.push({
      kind: "marker",
      at,
      radius: MARKER_RADIUS,
      color: isPoseTask ? "#c6733f" : VIA_POINT_COLOR,
      label: isPoseTask ? `c${index}` : `a${index}`,
    });
  });

  if (state.mechanism && state.mechanism.mechanisms.length > 0) {
    const loop = state.mechanism.mechanisms[0];
    const anchors = loop.joints.map(axisPoint);
    loop.joints.forEach((axis, index) => {
      const base = anchors[index];
      const along: Vec3 = [
        base[0] + axis.direction[0],
        base[1] + axis.direction[1],
        base[2] + axis.direction[2],
      ];
      const opposite: Vec3 = [
        base[0] - axis.direction[0],
        base[1] - axis.direction[1],
        base[2] - axis.direction[2],
      ];
      primitives.push({
        kind: "segment",
        from: project(camera, opposite),
        to: project(camera, along),
        color: "#3f8b52",
        width: 1.5,
      });
    });
    // loop skeleton through the joint anchor points
    for (let i = 0; i < anchors.length; i++) {
      primitives.push({
        kind: "segment",
        from: project(camera, anchors[i]),
        to: project(camera, anchors[(i + 1) % anchors.length]),
        color: "#7a7a85",
        width: 1,
      });
    }
  }

  if (state.errorBanner) {
    primitives.push({ kind: "banner", text: state.errorBanner });
  }
  return { primitives, curve, markers };
}

export function paint(ctx: CanvasRenderingContext2D, plan: DrawPlan): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  for (const prim of plan.primitives) {
    switch (prim.kind) {
      case "polyline": {
        ctx.strokeStyle = prim.color;
        ctx.lineWidth = prim.width;
        ctx.beginPath();
        prim.points.forEach(([x, y], i) => (i ? ctx.lineTo(x, y) : ctx.moveTo(x, y)));
        ctx.stroke();
        break;
      }
      case "marker": {
        ctx.fillStyle = prim.color;
        ctx.beginPath();
        ctx.arc(prim.at[0], prim.at[1], prim.radius, 0, 2 * Math.PI);
        ctx.fill();
        ctx.fillStyle = "#333";
        ctx.font = "11px sans-serif";
        ctx.fillText(prim.label, prim.at[0] + prim.radius + 2, prim.at[1] - 2);
        break;
      }
      case "segment": {
        ctx.strokeStyle = prim.color;
        ctx.lineWidth = prim.width;
        ctx.beginPath();
        ctx.moveTo(prim.from[0], prim.from[1]);
        ctx.lineTo(prim.to[0], prim.to[1]);
        ctx.stroke();
        break;
      }
      case "triad": {
        const colors = ["#d23f3f", "#3fa33f", "#3f5fd2"];
        prim.axes.forEach((tip, i) => {
          ctx.strokeStyle = colors[i];
          ctx.lineWidth = 2;
          ctx.beginPath();
          ctx.moveTo(prim.origin[0], prim.origin[1]);
          ctx.lineTo(tip[0], tip[1]);
          ctx.stroke();
        });
        break;
      }
      case "banner": {
        ctx.fillStyle = "#c0392b";
        ctx.font = "13px sans-serif";
        ctx.fillText(prim.text, 12, 20);
        break;
      }
    }
  }
}
