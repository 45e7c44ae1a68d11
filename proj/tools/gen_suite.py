#!/usr/bin/env python3
"""Writes the curated corner/edge suite to data/suite.

Each problem is an eye space against the board edge, ringed by a defender
wall, ringed in turn by an attacker wall; the rest of the board is empty.
"""
import argparse
import pathlib

SHAPES = {
    "straight3": [(0, 0), (1, 0), (2, 0)],
    "bent3": [(0, 0), (1, 0), (1, 1)],
    "straight4": [(0, 0), (1, 0), (2, 0), (3, 0)],
    "bent4": [(0, 0), (1, 0), (2, 0), (2, 1)],
    "square4": [(0, 0), (1, 0), (0, 1), (1, 1)],
    "t4": [(0, 0), (1, 0), (2, 0), (1, 1)],
    "straight5": [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)],
    "bulky5": [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)],
    "l5": [(0, 0), (1, 0), (2, 0), (3, 0), (3, 1)],
    "t5": [(0, 0), (1, 0), (2, 0), (1, 1), (1, 2)],
    "rect6": [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)],
    "rabbity6": [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)],
}

# Pool members kept for the suite: `rzsolve solve --backend tt` (seed 1)
# solves each within 30000 nodes and needs at least 30. Results of the pt backend played no part.
SELECTED = {
    "c09_bent3_n_b_kill", "c09_bent3_n_b_live", "c09_bulky5_n_w_kill", "c09_bulky5_n_w_live",
    "c09_rabbity6_n_w_live", "c09_rect6_n_w_kill", "c09_rect6_n_w_live", "c09_square4_n_b_kill",
    "c09_square4_n_b_live", "c09_square4_n_w_live", "c09_straight3_n_b_kill",
    "c09_straight3_n_b_live", "c09_straight4_n_b_live", "c13_bent3_0_b_kill",
    "c13_bent3_0_b_live", "c13_bulky5_0_w_kill", "c13_rect6_0_w_kill", "c13_rect6_0_w_live",
    "c13_straight3_0_b_kill", "c13_straight3_0_b_live", "c19_bent3_1_b_kill",
    "c19_rabbity6_3_w_live", "c19_rect6_3_b_live", "c19_rect6_3_w_live", "c19_square4_2_b_kill",
    "c19_straight3_1_b_kill", "e09_bent3_n_b_kill", "e09_bent3_n_b_live", "e09_bulky5_n_w_kill",
    "e09_bulky5_n_w_live", "e09_l5_n_b_live", "e09_rabbity6_n_w_kill", "e09_rabbity6_n_w_live",
    "e09_rect6_n_b_kill", "e09_rect6_n_w_kill", "e09_rect6_n_w_live", "e09_straight3_n_b_kill",
    "e09_straight3_n_b_live", "e09_t5_n_b_live", "e13_bent3_0_b_kill", "e13_bent3_0_b_live",
    "e13_bulky5_0_w_kill", "e13_rect6_0_w_kill", "e13_rect6_0_w_live", "e13_straight3_0_b_kill",
    "e13_straight3_0_b_live", "e19_bent3_1_b_kill", "e19_rect6_3_b_kill",
    "e19_straight3_1_b_kill",
}


def ring(points, size):
    out = set()
    for c, r in points:
        for dc in (-1, 0, 1):
            for dr in (-1, 0, 1):
                q = (c + dc, r + dr)
                if 0 <= q[0] < size and 0 <= q[1] < size and q not in points:
                    out.add(q)
    return out


def sgf_point(p):
    return chr(ord("a") + p[0]) + chr(ord("a") + p[1])


def build(name, size, shape, place, to_move, goal, stones):
    offset = 0 if place == "corner" else size // 2 - 2
    eye = [(c + offset, r) for c, r in SHAPES[shape]]
    eye_set = set(eye)
    white = ring(eye_set, size)
    black = ring(eye_set | white, size)
    inner = {eye[i] for i in stones}
    ab = sorted(black | inner)
    aw = sorted(white)
    parts = [f"(;FF[4]GM[1]SZ[{size}]GN[{name}]C[goal: {goal}]PL[{to_move}]"]
    parts.append("AB" + "".join(f"[{sgf_point(p)}]" for p in ab))
    parts.append("AW" + "".join(f"[{sgf_point(p)}]" for p in aw))
    parts.append("MA" + "".join(f"[{sgf_point(p)}]" for p in aw))
    parts.append(")\n")
    return "".join(parts)


def pool():
    """Every combination considered when the suite was screened."""
    sizes = [9, 13, 19]
    k = 0
    for shape in SHAPES:
        for place in ("corner", "edge"):
            for to_move in ("B", "W"):
                for goal in ("live", "kill"):
                    for stones in ([], [0], [len(SHAPES[shape]) // 2]):
                        size = sizes[k % 3]
                        k += 1
                        tag = "".join(str(i) for i in stones) or "n"
                        name = f"{place[0]}{size:02d}_{shape}_{tag}_{to_move.lower()}_{goal}"
                        yield (name, size, shape, place, to_move, goal, stones)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "suite"))
    ap.add_argument("--pool", action="store_true", help="write the whole screening pool instead")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, size, shape, place, to_move, goal, stones in (p for p in pool() if args.pool or p[0] in SELECTED):
        (out / f"{name}.sgf").write_text(build(name, size, shape, place, to_move, goal, stones))


if __name__ == "__main__":
    main()
