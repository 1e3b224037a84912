"""Tiny ASCII renderer shared by the demo scripts."""


def sketch(cells, mark=()):
    """One line per lattice row; ``[]`` is a hexagon, ``##`` a marked one."""
    cells = set(map(tuple, cells))
    mark = set(map(tuple, mark))
    xs = [2 * q + r for q, r in cells]
    x0 = min(xs)
    lines = []
    for r in sorted({r for _, r in cells}):
        row = [" "] * (2 * (max(xs) - x0) + 4)
        for q, rr in cells:
            if rr == r:
                x = 2 * (2 * q + r - x0)
                row[x:x + 2] = "##" if (q, rr) in mark else "[]"
        lines.append("".join(row).rstrip())
    return "\n".join(lines)
