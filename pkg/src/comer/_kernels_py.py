"""Pure-Python kernels. Same signatures and semantics as the compiled ``_kernels``.

Buffers are caller-allocated: ``class_index`` and ``status`` are bytearrays,
``elements`` and ``diffs`` are ``array('I')``, ``overlaps`` is ``array('q')``.  Coset ``i`` lives
in ``elements[i*k:(i+1)*k]`` with ``elements[i*k] == g**i``.
"""

BACKEND = "python"

UNSET = 2


def fill_cosets(p, n, g, class_index, elements):
    k = (p - 1) // n
    x = 1
    for a in range(k):
        for i in range(n):
            class_index[x] = i
            elements[i * k + a] = x
            x = x * g % p


def sumset_bitmap(p, k, elements, i, j):
    bitmap = bytearray(p)
    xs = elements[i * k:(i + 1) * k]
    ys = elements[j * k:(j + 1) * k]
    for x in xs:
        for y in ys:
            s = x + y
            if s >= p:
                s -= p
            bitmap[s] = 1
    return bitmap


def naive_overlaps(p, n, k, elements, overlaps, status):
    """overlaps[i*n + j] = |(X_0 + X_i) & X_j|; status is 1 where that is all of X_j.

    Returns the flat index of the first overlap that is neither empty nor
    full, or -1.
    """
    bad = -1
    for i in range(n):
        bitmap = sumset_bitmap(p, k, elements, 0, i)
        for j in range(n):
            hits = 0
            for c in range(j * k, (j + 1) * k):
                hits += bitmap[elements[c]]
            overlaps[i * n + j] = hits
            status[i * n + j] = hits == k
            if 0 < hits < k and bad < 0:
                bad = i * n + j
    return bad


def difference_sets(p, n, k, elements, diffs):
    """diffs[j*k + a] = g**j - X_0[a] mod p."""
    for j in range(n):
        gj = elements[j * k]
        for a in range(k):
            d = gj - elements[a]
            diffs[j * k + a] = d + p if d < 0 else d


def fast_test(class_index, diffs, k, i, j):
    """True iff (g**j - X_0) meets X_i, i.e. the cycle (0, i, j) is mandatory."""
    for a in range(j * k, (j + 1) * k):
        if class_index[diffs[a]] == i:
            return True
    return False


def sweep_symmetric(n, k, class_index, diffs, status):
    tests = 0
    for i in range(n):
        for j in range(i, n):
            v = 0
            for a in range(j * k, (j + 1) * k):
                if class_index[diffs[a]] == i:
                    v = 1
                    break
            tests += 1
            status[i * n + j] = v
            status[j * n + i] = v
    return tests


def sweep_asymmetric(n, k, class_index, diffs, status):
    m = n // 2
    tests = 0
    for i in range(n):
        for t in range(i, n):
            j = (t + m) % n
            v = 0
            for a in range(j * k, (j + 1) * k):
                if class_index[diffs[a]] == i:
                    v = 1
                    break
            tests += 1
            status[i * n + j] = v
            status[((j + m) % n) * n + (i + m) % n] = v
    return tests
