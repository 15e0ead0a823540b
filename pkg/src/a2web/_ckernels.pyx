# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in _pykernels."""

from libc.stdlib cimport malloc, free


def cycle_labels(perm):
    cdef Py_ssize_t n = len(perm), start, d, i
    cdef long *p = <long *> malloc(max(n, 1) * sizeof(long))
    cdef long *lab = <long *> malloc(max(n, 1) * sizeof(long))
    cdef long count = 0
    try:
        for i in range(n):
            p[i] = perm[i]
            lab[i] = -1
        for start in range(n):
            if lab[start] >= 0:
                continue
            d = start
            while lab[d] < 0:
                lab[d] = count
                d = p[d]
            count += 1
        return [lab[i] for i in range(n)], count
    finally:
        free(p)
        free(lab)


def dual_bfs(face_of, mate, wall, long n_faces, long root):
    cdef Py_ssize_t nd = len(face_of), i, d, head = 0, tail = 0
    cdef long f, g
    cdef long *fo = <long *> malloc(max(nd, 1) * sizeof(long))
    cdef long *mt = <long *> malloc(max(nd, 1) * sizeof(long))
    cdef char *wl = <char *> malloc(max(nd, 1) * sizeof(char))
    cdef long *start = <long *> malloc((n_faces + 1) * sizeof(long))
    cdef long *nbr = <long *> malloc(max(nd, 1) * sizeof(long))
    cdef long *depth = <long *> malloc(max(n_faces, 1) * sizeof(long))
    cdef long *queue = <long *> malloc(max(n_faces, 1) * sizeof(long))
    try:
        for i in range(n_faces + 1):
            start[i] = 0
        for d in range(nd):
            fo[d] = face_of[d]
            mt[d] = mate[d]
            wl[d] = 1 if wall[d] else 0
            if not wl[d]:
                start[fo[d] + 1] += 1
        for i in range(n_faces):
            start[i + 1] += start[i]
            depth[i] = -1
        for d in range(nd):
            if not wl[d]:
                nbr[start[fo[d]]] = fo[mt[d]]
                start[fo[d]] += 1
        for i in range(n_faces, 0, -1):
            start[i] = start[i - 1]
        start[0] = 0
        depth[root] = 0
        queue[tail] = root
        tail += 1
        while head < tail:
            f = queue[head]
            head += 1
            for i in range(start[f], start[f + 1]):
                g = nbr[i]
                if depth[g] < 0:
                    depth[g] = depth[f] + 1
                    queue[tail] = g
                    tail += 1
        return [depth[i] for i in range(n_faces)]
    finally:
        free(fo); free(mt); free(wl); free(start); free(nbr); free(depth); free(queue)


def rs_insert(perm):
    cdef Py_ssize_t n = len(perm), step, r, lo, hi, mid, length
    cdef long x, y
    ins = []
    rec = []
    for step in range(n):
        x = perm[step]
        r = 0
        while True:
            if r == len(ins):
                ins.append([x])
                rec.append([step + 1])
                break
            row = ins[r]
            length = len(row)
            lo = 0
            hi = length
            while lo < hi:
                mid = (lo + hi) // 2
                if <long> row[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == length:
                row.append(x)
                rec[r].append(step + 1)
                break
            y = row[lo]
            row[lo] = x
            x = y
            r += 1
    return rec, ins
