// Deterministic layered layout computed once per session from the initial
// exchange matrix. An arrow x -> z is encoded by matrix[x][z] < 0; the
// valuation label of that arrow is (|b_xz|, |b_zx|), shown when not (1,1).

export interface Arrow {
  from: number; // 1-based
  to: number;
  label: [number, number];
}

export interface VertexPosition {
  x: number;
  y: number;
}

export function arrowsFromMatrix(matrix: number[][]): Arrow[] {
  const arrows: Arrow[] = [];
  const n = matrix.length;
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      const bij = matrix[i]![j]!;
      if (bij < 0) {
        arrows.push({
          from: i + 1,
          to: j + 1,
          label: [Math.abs(bij), Math.abs(matrix[j]![i]!)],
        });
      }
    }
  }
  arrows.sort((a, b) => a.from - b.from || a.to - b.to);
  return arrows;
}

// Reverse topological order (sinks first, smallest index on ties). Falls
// back to index order for leftovers so cyclic inputs still get positions.
export function admissibleSinkOrder(n: number, arrows: Arrow[]): number[] {
  const outDeg = new Array<number>(n + 1).fill(0);
  const into: number[][] = Array.from({ length: n + 1 }, () => []);
  for (const a of arrows) {
    outDeg[a.from]!++;
    into[a.to]!.push(a.from);
  }
  const order: number[] = [];
  const used = new Array<boolean>(n + 1).fill(false);
  for (;;) {
    let pick = 0;
    for (let v = 1; v <= n; v++) {
      if (!used[v] && outDeg[v] === 0) {
        pick = v;
        break;
      }
    }
    if (pick === 0) break;
    used[pick] = true;
    order.push(pick);
    for (const w of into[pick]!) {
      outDeg[w]!--;
    }
  }
  for (let v = 1; v <= n; v++) {
    if (!used[v]) order.push(v);
  }
  return order;
}

// Columns are longest-path depths toward the sinks; vertices in one column
// stack by index. Everything is integer arithmetic on a fixed grid: no
// physics, byte-stable output.
export function layeredLayout(
  n: number,
  arrows: Arrow[],
  width: number,
  height: number,
): VertexPosition[] {
  const order = admissibleSinkOrder(n, arrows);
  const depth = new Array<number>(n + 1).fill(0);
  const out: number[][] = Array.from({ length: n + 1 }, () => []);
  for (const a of arrows) out[a.from]!.push(a.to);
  for (const v of order) {
    for (const t of out[v]!) {
      depth[v] = Math.max(depth[v]!, depth[t]! + 1);
    }
  }
  const maxDepth = Math.max(0, ...depth.slice(1));
  const columns: number[][] = Array.from({ length: maxDepth + 1 }, () => []);
  for (let v = 1; v <= n; v++) columns[depth[v]!]!.push(v);
  const positions: VertexPosition[] = new Array(n);
  const colSpan = width / (maxDepth + 2);
  for (let d = 0; d <= maxDepth; d++) {
    const column = columns[d]!;
    const rowSpan = height / (column.length + 1);
    column.sort((a, b) => a - b);
    column.forEach((v, row) => {
      positions[v - 1] = {
        x: Math.round(colSpan * (d + 1)),
        y: Math.round(rowSpan * (row + 1)),
      };
    });
  }
  return positions;
}
