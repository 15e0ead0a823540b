"""Pure-Python versions of the hot loops; used when the compiled module is missing."""

from collections import deque


def cycle_labels(perm):
    """Label the cycles of a permutation given as a list; returns (labels, count)."""
    n = len(perm)
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        d = start
        while labels[d] < 0:
            labels[d] = count
            d = perm[d]
        count += 1
    return labels, count


def dual_bfs(face_of, mate, wall, n_faces, root):
    """Breadth-first distances between faces across non-wall darts; -1 if unreachable."""
    adj = [[] for _ in range(n_faces)]
    for d in range(len(face_of)):
        if not wall[d]:
            adj[face_of[d]].append(face_of[mate[d]])
    depth = [-1] * n_faces
    depth[root] = 0
    queue = deque([root])
    while queue:
        f = queue.popleft()
        for g in adj[f]:
            if depth[g] < 0:
                depth[g] = depth[f] + 1
                queue.append(g)
    return depth


def rs_insert(perm):
    """Row insertion of ``perm``; returns (recording rows, insertion rows)."""
    ins = []
    rec = []
    for step, x in enumerate(perm, start=1):
        r = 0
        while True:
            if r == len(ins):
                ins.append([x])
                rec.append([step])
                break
            row = ins[r]
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == len(row):
                row.append(x)
                rec[r].append(step)
                break
            row[lo], x = x, row[lo]
            r += 1
    return rec, ins
