// Orthographic screen projection with a turntable camera. Pure functions:
// the renderer and the tests share the same pixel mapping.

import { Vec3 } from "./types.js";

export interface Camera {
  yaw: number;    // radians around the vertical axis
  pitch: number;  // radians above the horizontal plane
  scale: number;  // pixels per world unit
  centerX: number;
  centerY: number;
  target: Vec3;   // world point mapped to the canvas center
}

export function defaultCamera(width: number, height: number): Camera {
  return {
    yaw: 0.6,
    pitch: 0.45,
    scale: Math.min(width, height) / 5,
    centerX: width / 2,
    centerY: height / 2,
    target: [0, 0, 0],
  };
}

/** World point to screen pixels (y grows downward). */
export function project(camera: Camera, p: Vec3): [number, number] {
  const x = p[0] - camera.target[0];
  const y = p[1] - camera.target[1];
  const z = p[2] - camera.target[2];
  const cy = Math.cos(camera.yaw);
  const sy = Math.sin(camera.yaw);
  const cp = Math.cos(camera.pitch);
  const sp = Math.sin(camera.pitch);
  // rotate about z (yaw), then tilt toward the viewer (pitch)
  const rx = cy * x + sy * y;
  const ry = -sy * x + cy * y;
  const sx = rx;
  const sYup = cp * z - sp * ry;
  return [camera.centerX + camera.scale * sx, camera.centerY - camera.scale * sYup];
}

/** Screen pixels back to the world plane through `anchor` facing the camera.
 *  Used to drag markers: the point keeps its depth along the view axis. */
export function unproject(camera: Camera, sx: number, sy: number, anchor: Vec3): Vec3 {
  const cy = Math.cos(camera.yaw);
  const sy_ = Math.sin(camera.yaw);
  const cp = Math.cos(camera.pitch);
  const sp = Math.sin(camera.pitch);
  const ax = anchor[0] - camera.target[0];
  const ay = anchor[1] - camera.target[1];
  const az = anchor[2] - camera.target[2];
  // rotated anchor coordinates; the view depth is the coordinate the
  // projection discards
  const ary = -sy_ * ax + cy * ay;
  const depth = sp * az + cp * ary;
  // invert the screen mapping for the two visible coordinates
  const vx = (sx - camera.centerX) / camera.scale;
  const vu = (camera.centerY - sy) / camera.scale; // = cp*z - sp*ry
  const ry = cp * depth - sp * vu;
  const rz = sp * depth + cp * vu;
  const rx = vx;
  // undo the yaw rotation
  const wx = cy * rx - sy_ * ry;
  const wy = sy_ * rx + cy * ry;
  return [wx + camera.target[0], wy + camera.target[1], rz + camera.target[2]];
}

/** Display anchor of a pose row [p0..p3, q0..q3]: the vector part of
 *  q p^-1, mirroring the server's origin map for glyph placement only. */
export function poseOrigin(pose: number[]): Vec3 {
  const [p0, p1, p2, p3, q0, q1, q2, q3] = pose;
  const n = p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3;
  return [
    (-q0 * p1 + q1 * p0 - q2 * p3 + q3 * p2) / n,
    (-q0 * p2 + q1 * p3 + q2 * p0 - q3 * p1) / n,
    (-q0 * p3 - q1 * p2 + q2 * p1 + q3 * p0) / n,
  ];
}

export function distanceToPolyline(
  point: [number, number],
  polyline: [number, number][],
): number {
  let best = Infinity;
  for (let i = 0; i + 1 < polyline.length; i++) {
    const [ax, ay] = polyline[i];
    const [bx, by] = polyline[i + 1];
    const dx = bx - ax;
    const dy = by - ay;
    const lengthSq = dx * dx + dy * dy;
    let u = 0;
    if (lengthSq > 0) {
      u = ((point[0] - ax) * dx + (point[1] - ay) * dy) / lengthSq;
      u = Math.max(0, Math.min(1, u));
    }
    const px = ax + u * dx;
    const py = ay + u * dy;
    best = Math.min(best, Math.hypot(point[0] - px, point[1] - py));
  }
  return best;
}
