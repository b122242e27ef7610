"""Writes the bundled tensor files under data/tensors/."""
import pathlib

TABLES = {
    "t2-1": [[[1, 2], [2, 1]], [[2, 1], [1, 2]]],
    "t2-2": [[[2, 1], [1, 2]], [[1, 2], [2, 1]]],
    "t3-1": [[[1, 2, 3], [2, 3, 1], [3, 1, 2]], [[3, 1, 2], [1, 2, 3], [2, 3, 1]], [[2, 3, 1], [3, 1, 2], [1, 2, 3]]],
    "t3-2": [[[1, 2, 3], [3, 1, 2], [2, 3, 1]], [[2, 3, 1], [1, 2, 3], [3, 1, 2]], [[3, 1, 2], [2, 3, 1], [1, 2, 3]]],
    "t3-3": [[[1, 3, 2], [2, 1, 3], [3, 2, 1]], [[2, 1, 3], [3, 2, 1], [1, 3, 2]], [[3, 2, 1], [1, 3, 2], [2, 1, 3]]],
    "t3-4": [[[1, 3, 2], [3, 2, 1], [2, 1, 3]], [[3, 2, 1], [2, 1, 3], [1, 3, 2]], [[2, 1, 3], [1, 3, 2], [3, 2, 1]]],
    "t3-5": [[[2, 1, 3], [3, 2, 1], [1, 3, 2]], [[3, 2, 1], [1, 3, 2], [2, 1, 3]], [[1, 3, 2], [2, 1, 3], [3, 2, 1]]],
    "t3-6": [[[2, 3, 1], [1, 2, 3], [3, 1, 2]], [[3, 1, 2], [2, 3, 1], [1, 2, 3]], [[1, 2, 3], [3, 1, 2], [2, 3, 1]]],
    "t3-7": [[[2, 3, 1], [3, 1, 2], [1, 2, 3]], [[1, 2, 3], [2, 3, 1], [3, 1, 2]], [[3, 1, 2], [1, 2, 3], [2, 3, 1]]],
    "t4-1": [
        [[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]],
        [[2, 1, 4, 3], [1, 2, 3, 4], [4, 3, 2, 1], [3, 4, 1, 2]],
        [[3, 4, 1, 2], [4, 3, 2, 1], [1, 2, 3, 4], [2, 1, 4, 3]],
        [[4, 3, 2, 1], [3, 4, 1, 2], [2, 1, 4, 3], [1, 2, 3, 4]],
    ],
}


def tensor_text(blocks):
    out = [str(len(blocks))]
    for i, block in enumerate(blocks):
        if i:
            out.append("")
        out.extend(" ".join(map(str, row)) for row in block)
    return "\n".join(out) + "\n"


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "data" / "tensors"
    root.mkdir(parents=True, exist_ok=True)
    for name, blocks in TABLES.items():
        (root / f"{name}.tensor").write_text(tensor_text(blocks))
    sections = [("0", ["0\n"]), ("1", ["1\n1\n"])]
    for order in "23":
        sections.append((order, [tensor_text(b) for k, b in TABLES.items() if k.startswith(f"t{order}-")]))
    census = ""
    for order, tensors in sections:
        census += f"order={order} classes={len(tensors)} filter=entropic\n" + "---\n".join(tensors)
    (root / "classes.census").write_text(census)


if __name__ == "__main__":
    main()
