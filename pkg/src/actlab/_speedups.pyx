# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy


cdef int* _to_c(seq, Py_ssize_t n) except NULL:
    cdef int* buf = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def close_partial(src, int ns, tgt, int nt, int n_s, fixed):
    cdef int* a = _to_c(src, n_s * ns)
    cdef int* b = _to_c(tgt, n_s * nt)
    cdef int* m = <int*> malloc((ns if ns > 0 else 1) * sizeof(int))
    cdef int x, y, s, z, w
    cdef object conflict = None
    try:
        for x in range(ns):
            m[x] = -1
        for x in range(ns):
            y = fixed[x]
            if y < 0:
                continue
            for s in range(n_s):
                z = a[s * ns + x]
                w = b[s * nt + y]
                if m[z] == -1:
                    m[z] = w
                elif m[z] != w:
                    conflict = (z, m[z], w)
                    break
            if conflict is not None:
                break
        if conflict is not None:
            return None, conflict
        return [m[x] for x in range(ns)], None
    finally:
        free(a)
        free(b)
        free(m)


cdef struct HomState:
    int* src
    int* tgt
    int* m
    int* used
    int* trail
    int ns
    int nt
    int n_s
    int injective


cdef int _assign(HomState* st, int x, int y, int* tlen):
    cdef int s, z, w
    for s in range(st.n_s):
        z = st.src[s * st.ns + x]
        w = st.tgt[s * st.nt + y]
        if st.m[z] == -1:
            if st.injective:
                if st.used[w]:
                    return 0
                st.used[w] = 1
            st.m[z] = w
            st.trail[tlen[0]] = z
            tlen[0] += 1
        elif st.m[z] != w:
            return 0
    return 1


cdef void _undo(HomState* st, int start, int* tlen):
    cdef int i, z
    for i in range(start, tlen[0]):
        z = st.trail[i]
        if st.injective:
            st.used[st.m[z]] = 0
        st.m[z] = -1
    tlen[0] = start


def hom_search(src, int ns, tgt, int nt, int n_s, start, bint injective, int limit):
    cdef HomState st
    cdef int x, y, top, tlen, ok
    cdef int* stack_x
    cdef int* stack_y
    cdef int* stack_t
    out = []
    st.ns = ns
    st.nt = nt
    st.n_s = n_s
    st.injective = injective
    st.src = _to_c(src, n_s * ns)
    st.tgt = _to_c(tgt, n_s * nt)
    st.m = _to_c(start, ns)
    st.used = <int*> malloc((nt if nt > 0 else 1) * sizeof(int))
    st.trail = <int*> malloc((ns if ns > 0 else 1) * sizeof(int))
    stack_x = <int*> malloc((ns + 1) * sizeof(int))
    stack_y = <int*> malloc((ns + 1) * sizeof(int))
    stack_t = <int*> malloc((ns + 1) * sizeof(int))
    try:
        for y in range(nt):
            st.used[y] = 0
        if injective:
            for x in range(ns):
                if st.m[x] >= 0:
                    st.used[st.m[x]] += 1
                    if st.used[st.m[x]] > 1:
                        return out
        # iterative DFS: frame = (element, next candidate, trail mark)
        tlen = 0
        top = 0
        x = 0
        while x < ns and st.m[x] != -1:
            x += 1
        if x == ns:
            out.append([st.m[i] for i in range(ns)])
            return out
        stack_x[0] = x
        stack_y[0] = 0
        stack_t[0] = 0
        while top >= 0:
            x = stack_x[top]
            _undo(&st, stack_t[top], &tlen)
            y = stack_y[top]
            if y >= nt:
                top -= 1
                continue
            stack_y[top] = y + 1
            ok = _assign(&st, x, y, &tlen)
            if not ok:
                continue
            x += 1
            while x < ns and st.m[x] != -1:
                x += 1
            if x == ns:
                out.append([st.m[i] for i in range(ns)])
                if 0 <= limit <= len(out):
                    return out
                continue
            top += 1
            stack_x[top] = x
            stack_y[top] = 0
            stack_t[top] = tlen
        return out
    finally:
        free(st.src)
        free(st.tgt)
        free(st.m)
        free(st.used)
        free(st.trail)
        free(stack_x)
        free(stack_y)
        free(stack_t)


def transformation_homs(mul, int n_s, int m, gens, levels, cands):
    cdef int ngen = len(gens)
    cdef int* mt = _to_c(mul, n_s * n_s)
    cdef int* act = <int*> malloc((n_s * m if n_s * m > 0 else 1) * sizeof(int))
    cdef int* tmp = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int* gen = _to_c(gens, ngen)
    cdef int* choice = <int*> malloc((ngen + 1) * sizeof(int))
    cdef int i, x, s, t, e, pre, gp, level, ok, nk, g, ncand, k
    cdef int* cand_buf
    cdef int** cand_ptr = <int**> malloc((ngen + 1) * sizeof(int*))
    cdef int* cand_n = <int*> malloc((ngen + 1) * sizeof(int))
    cdef int** lvl_ptr = <int**> malloc((ngen + 1) * sizeof(int*))
    cdef int* lvl_n = <int*> malloc((ngen + 1) * sizeof(int))
    out = []
    for level in range(ngen):
        flat = [v for f in cands[level] for v in f]
        cand_ptr[level] = _to_c(flat, len(flat))
        cand_n[level] = len(cands[level])
        flat = [v for trip in levels[level] for v in trip]
        lvl_ptr[level] = _to_c(flat, len(flat))
        lvl_n[level] = len(levels[level])
    try:
        for x in range(m):
            act[x] = x
        if ngen == 0:
            out.append([act[x] for x in range(m)])
            return out
        level = 0
        choice[0] = 0
        while level >= 0:
            if choice[level] >= cand_n[level]:
                level -= 1
                if level >= 0:
                    choice[level] += 1
                continue
            g = gen[level]
            memcpy(&act[g * m], &cand_ptr[level][choice[level] * m], m * sizeof(int))
            # derive the rest of the submonoid, then check every product
            nk = lvl_n[level]
            for i in range(nk):
                e = lvl_ptr[level][3 * i]
                pre = lvl_ptr[level][3 * i + 1]
                gp = lvl_ptr[level][3 * i + 2]
                if e != gen[gp]:
                    for x in range(m):
                        act[e * m + x] = act[pre * m + act[gen[gp] * m + x]]
            ok = 1
            for i in range(nk + 1):
                s = lvl_ptr[level][3 * i] if i < nk else 0
                for k in range(nk + 1):
                    t = lvl_ptr[level][3 * k] if k < nk else 0
                    e = mt[s * n_s + t]
                    for x in range(m):
                        if act[s * m + act[t * m + x]] != act[e * m + x]:
                            ok = 0
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                choice[level] += 1
                continue
            if level == ngen - 1:
                out.append([act[i] for i in range(n_s * m)])
                choice[level] += 1
                continue
            level += 1
            choice[level] = 0
        return out
    finally:
        for level in range(ngen):
            free(cand_ptr[level])
            free(lvl_ptr[level])
        free(cand_ptr)
        free(cand_n)
        free(lvl_ptr)
        free(lvl_n)
        free(mt)
        free(act)
        free(tmp)
        free(gen)
        free(choice)


cdef int _next_perm(int* a, int n):
    cdef int i = n - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return 0
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return 1


def canonical_table(table, int n_s, int m):
    cdef int size = n_s * m
    cdef int* tab = _to_c(table, size)
    cdef int* best = <int*> malloc((size if size > 0 else 1) * sizeof(int))
    cdef int* cand = <int*> malloc((size if size > 0 else 1) * sizeof(int))
    cdef int* inv = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int* perm = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int* best_perm = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int have = 0, i, s, new, v, pos, state
    try:
        for i in range(m):
            inv[i] = i
        while True:
            for new in range(m):
                perm[inv[new]] = new
            # state: 0 tie so far, 1 better, -1 worse
            state = 0 if have else 1
            pos = 0
            for s in range(n_s):
                for new in range(m):
                    v = perm[tab[s * m + inv[new]]]
                    if state == 0:
                        if v > best[pos]:
                            state = -1
                            break
                        if v < best[pos]:
                            state = 1
                    cand[pos] = v
                    pos += 1
                if state == -1:
                    break
            if state == 1:
                memcpy(best, cand, size * sizeof(int))
                memcpy(best_perm, perm, m * sizeof(int))
                have = 1
            if not _next_perm(inv, m):
                break
        if not have:
            return list(table), list(range(m))
        return [best[i] for i in range(size)], [best_perm[i] for i in range(m)]
    finally:
        free(tab)
        free(best)
        free(cand)
        free(inv)
        free(perm)
        free(best_perm)
