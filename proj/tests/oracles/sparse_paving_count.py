"""Independent count of sparse paving iso classes: families H of r-subsets of
[n] with pairwise intersections <= r-2, up to S_n.

    sparse_paving_count.py N R     print the class count for one shape
    sparse_paving_count.py --check compare against the counts frozen in the C++ tests
"""
import argparse
import itertools

import numpy as np

# Frozen in tests/unit/test_classifiers.cpp after agreeing with this script.
FROZEN = {(6, 2): 4, (6, 3): 6, (7, 3): 14, (7, 4): 14, (8, 3): 32, (8, 4): 270}


def count_classes(n, r):
    subs = list(itertools.combinations(range(n), r))
    idx = {s: i for i, s in enumerate(subs)}
    m = len(subs)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    # P[p, i] = index of the image of subset i under permutation p
    P = np.empty((len(perms), m), dtype=np.int64)
    for i, s in enumerate(subs):
        img = np.sort(perms[:, list(s)], axis=1)
        P[:, i] = [idx[tuple(row)] for row in img]

    def canon(fam):
        imgs = np.sort(P[:, list(fam)], axis=1)
        order = np.lexsort(imgs.T[::-1])
        return tuple(imgs[order[0]])

    ok = [[len(set(a) & set(b)) <= r - 2 for b in subs] for a in subs]
    level = {()}
    total = 1
    while level:
        nxt = set()
        for fam in level:
            for j in range(m):
                if j in fam or not all(ok[j][i] for i in fam):
                    continue
                nxt.add(canon(fam + (j,)))
        total += len(nxt)
        level = nxt
    return total


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int, nargs="?")
    ap.add_argument("r", type=int, nargs="?")
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    if not args.check:
        print(args.n, args.r, count_classes(args.n, args.r))
        return 0
    bad = 0
    for (n, r), want in sorted(FROZEN.items()):
        got = count_classes(n, r)
        print(f"({n},{r}) oracle {got} frozen {want}", "ok" if got == want else "MISMATCH")
        bad += got != want
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
