"""Writes the bundled PD files under data/pd/.

knots.pd       prime knots up to 8 crossings (KnotInfo)
links.pd       prime oriented links up to 7 crossings (LinkInfo)
reidemeister.pd  diagram pairs related by Reidemeister moves; records whose
               names share the part before the last '.' are diagrams of one link

KnotInfo lists crossings clockwise; they are rewritten counterclockwise by
swapping the two over-strand labels, which keeps the diagram as drawn.
Requires the `database_knotinfo` and `spherogram` packages.
"""
import pathlib
import random
import re
import warnings

warnings.filterwarnings("ignore")

import database_knotinfo
import spherogram

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "pd"


def ccw(crossings):
    return [(a, d, c, b) for a, b, c, d in crossings]


def record(name, crossings):
    lines = [f"name {name}"]
    lines += [f"X {a} {b} {c} {d}" for a, b, c, d in crossings]
    return "\n".join(lines) + "\n"


def parse_vector(text):
    return [tuple(int(v) for v in m.split(",")) for m in re.findall(r"\{([\d,\s]+)\}", text)]


def knots():
    out = []
    for k in database_knotinfo.link_list():
        name = k["name"]
        if not re.fullmatch(r"\d+_\d+", name):
            continue
        if int(name.split("_")[0]) == 0 or int(k["crossing_number"]) > 8:
            continue
        pd = eval(k["pd_notation"])
        out.append(record(name, ccw(pd)))
    return out


def links():
    out = []
    for k in database_knotinfo.link_list(proper_links=True):
        if not k["crossing_number"].isdigit() or int(k["crossing_number"]) > 7:
            continue
        out.append(record(k["name"], ccw(parse_vector(k["pd_notation_vector"]))))
    return out


def one_based(link):
    return [tuple(e + 1 for e in x) for x in link.PD_code()]


def head_of(crossings, e, edges):
    """Index of the crossing where edge e ends, for labels increasing
    along a single-component orientation."""
    nxt = e % edges + 1
    for i, (a, b, c, d) in enumerate(crossings):
        if a == e:
            return i
        if (b, d) == (e, nxt) or (d, b) == (e, nxt):
            return i
    raise ValueError("edge head not found")


def with_kink(crossings, e, variant):
    """Inserts a one-crossing loop on edge e of a knot diagram."""
    edges = 2 * len(crossings)
    assert 1 <= e < edges
    head = head_of(crossings, e, edges)
    shifted = []
    for i, x in enumerate(crossings):
        y = [v + 2 if v > e else v for v in x]
        if i == head:
            y = [e + 2 if v == e else v for v in y]
        shifted.append(tuple(y))
    a, b, c = e, e + 1, e + 2
    kink = [(a, c, b, b), (a, b, b, c), (b, b, c, a), (b, a, c, b)][variant]
    return shifted + [kink]


def reidemeister():
    out = []
    trefoil = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
    out.append(record("r1-3_1.0", trefoil))
    for v in range(4):
        out.append(record(f"r1-3_1.{v + 1}", with_kink(trefoil, 2, v)))
    figure8 = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]
    out.append(record("r1-4_1.0", figure8))
    for v in range(4):
        out.append(record(f"r1-4_1.{v + 1}", with_kink(figure8, 5, v)))
    out.append(record("r1-unknot.0", []))
    out.append(record("r1-unknot.1", [(1, 2, 2, 1)]))
    out.append(record("r1-unknot.2", [(2, 1, 1, 2)]))

    braids = [
        ("r2-a", [1, 2], [1, 2, 1, -1]),
        ("r2-b", [1, 1, 1, 2], [1, 1, -2, 2, 1, 2]),
        ("r2-c", [1, -2, 1, -2], [1, -2, -2, 2, 1, -2]),
        ("r3-a", [1, 2, 1], [2, 1, 2]),
        ("r3-b", [-1, 2, 1], [2, 1, -2]),
        ("r3-c", [-1, -2, -1], [-2, -1, -2]),
        ("r3-d", [1, 2, 1, 2, 2], [2, 1, 2, 2, 2]),
        ("r3-e", [1, -2, -1, 3, -2, 3], [-2, -1, 2, 3, -2, 3]),
    ]
    for name, u, v in braids:
        out.append(record(f"{name}.0", one_based(spherogram.Link(braid_closure=u))))
        out.append(record(f"{name}.1", one_based(spherogram.Link(braid_closure=v))))

    rng = random.Random(20240601)
    for knot, pd in [("3_1", trefoil), ("4_1", figure8), ("5_2", None)]:
        if pd is None:
            k = next(k for k in database_knotinfo.link_list() if k["name"] == knot)
            pd = ccw(eval(k["pd_notation"]))
        base = spherogram.Link([list(x) for x in pd])
        out.append(record(f"moves-{knot}.0", pd))
        for i in range(1, 4):
            random.seed(rng.randrange(1 << 30))
            m = base.copy()
            m.backtrack(6 + 2 * i)
            out.append(record(f"moves-{knot}.{i}", one_based(m)))
    return out


def write(name, header, records):
    text = f"# {header}\n\n" + "\n".join(records)
    (OUT / name).write_text(text)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write("knots.pd", "prime knots with at most 8 crossings", knots())
    write("links.pd", "prime oriented links with at most 7 crossings", links())
    write("reidemeister.pd", "diagrams related by Reidemeister moves, grouped by name prefix", reidemeister())


if __name__ == "__main__":
    main()
