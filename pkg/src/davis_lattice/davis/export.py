from typing import List, Tuple

from davis_lattice.davis.chamber import ChamberComplex, ChamberId


def dual_graph_edges(y: ChamberComplex) -> List[Tuple[ChamberId, ChamberId, str]]:
    """Adjacent chamber pairs (lower level first) with the type of the shared mirror"""
    return sorted((lower, upper, s) for (lower, upper), s in y.gluings.items())


def dual_graph_dot(y: ChamberComplex, name: str = "") -> str:
    """
    Render the dual graph of a chamber complex in DOT
    :param y: Chamber complex
    :param name: Graph name, Y_n by default
    :return: DOT text with one node per chamber and mirror types as edge labels
    """
    title = name or f"Y_{y.n}"
    lines = [f'graph "{title}" {{']
    for cid in y.chambers:
        lines.append(f'  "{cid}" [level={cid.level}];')
    for lower, upper, s in dual_graph_edges(y):
        lines.append(f'  "{lower}" -- "{upper}" [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
