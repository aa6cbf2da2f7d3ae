"""JSON exchange format for algebras, forms, and extension metadata.

Sparse, canonical, and version-tagged: brackets as ascending (i, j, k)
triples with i < j, squaring as ascending (i, k) pairs, Gram entries as
ascending (i, j) pairs with i <= j.  Deserializing then serializing a
canonical document is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .derivations import Derivation
from .errors import NisLieError
from .extension import ExtensionRecipe
from .forms import BilinearForm, QuadraticForm
from .gf2 import GF2Matrix, bits
from .superalgebra import SuperAlgebra

FORMAT_VERSION = 1


class DocumentError(NisLieError):
    pass


@dataclass
class AlgebraDocument:
    algebra: SuperAlgebra
    form: BilinearForm | None = None
    metadata: dict = field(default_factory=dict)


def _sparse_matrix(m: GF2Matrix, symmetric: bool) -> list[list[int]]:
    out = []
    for i, row in enumerate(m.rows):
        for j in bits(row):
            if symmetric and j < i:
                continue
            out.append([i, j])
    return sorted(out)


def to_dict(doc: AlgebraDocument) -> dict:
    g = doc.algebra
    n = g.dim
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in bits(g.bracket_table[i][j]):
                brackets.append([i, j, k])
    squaring = []
    for i in range(n):
        for k in bits(g.squaring[i]):
            squaring.append([i, k])
    data: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "basis": [
            {"name": g.names[i], "parity": g.parity[i]} for i in range(n)
        ],
        "bracket": sorted(brackets),
        "squaring": sorted(squaring),
    }
    if g.degrees is not None:
        data["degrees"] = list(g.degrees)
    if doc.form is not None:
        data["form"] = {
            "parity": doc.form.parity,
            "gram": _sparse_matrix(doc.form.gram, symmetric=True),
        }
    if doc.metadata:
        data["metadata"] = doc.metadata
    return data


def from_dict(data: dict) -> AlgebraDocument:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if data.get("format_version") != FORMAT_VERSION:
        raise DocumentError("missing or unsupported format_version")
    basis = data.get("basis")
    if not isinstance(basis, list) or not basis:
        raise DocumentError("missing basis")
    names, parity = [], []
    for entry in basis:
        try:
            names.append(str(entry["name"]))
            p = int(entry["parity"])
        except (TypeError, KeyError, ValueError) as exc:
            raise DocumentError(f"bad basis entry: {entry!r}") from exc
        if p not in (0, 1):
            raise DocumentError("parity must be 0 or 1")
        parity.append(p)
    n = len(names)
    if len(set(names)) != n:
        raise DocumentError("basis names must be distinct")

    def check_index(i):
        if not isinstance(i, int) or not 0 <= i < n:
            raise DocumentError(f"index {i!r} out of range")
        return i

    table = [[0] * n for _ in range(n)]
    for triple in data.get("bracket", []):
        if not isinstance(triple, list) or len(triple) != 3:
            raise DocumentError(f"bad bracket triple {triple!r}")
        i, j, k = (check_index(t) for t in triple)
        if i >= j:
            raise DocumentError("bracket triples must have i < j")
        table[i][j] ^= 1 << k
        table[j][i] ^= 1 << k
    squaring = [0] * n
    for pair in data.get("squaring", []):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"bad squaring pair {pair!r}")
        i, k = (check_index(t) for t in pair)
        squaring[i] ^= 1 << k
    degrees = data.get("degrees")
    if degrees is not None:
        if len(degrees) != n:
            raise DocumentError("degrees length mismatch")
        degrees = tuple(int(d) for d in degrees)
    g = SuperAlgebra(
        names=tuple(names),
        parity=tuple(parity),
        bracket_table=tuple(tuple(r) for r in table),
        squaring=tuple(squaring),
        degrees=degrees,
    )
    form = None
    if "form" in data:
        fdata = data["form"]
        p = fdata.get("parity")
        if p not in (0, 1):
            raise DocumentError("form parity must be 0 or 1")
        rows = [0] * n
        for pair in fdata.get("gram", []):
            if not isinstance(pair, list) or len(pair) != 2:
                raise DocumentError(f"bad gram pair {pair!r}")
            i, j = (check_index(t) for t in pair)
            if i > j:
                raise DocumentError("gram pairs must have i <= j")
            rows[i] |= 1 << j
            if i != j:
                rows[j] |= 1 << i
        form = BilinearForm(GF2Matrix(rows, n), p)
    meta = data.get("metadata", {})
    if not isinstance(meta, dict):
        raise DocumentError("metadata must be an object")
    return AlgebraDocument(g, form, meta)


def dumps(doc: AlgebraDocument) -> str:
    return json.dumps(to_dict(doc), indent=1, sort_keys=True) + "\n"


def loads(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_dict(data)


def save(doc: AlgebraDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def load(path) -> AlgebraDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


# ---------------------------------------------------------------------------
# Extension metadata embedding
# ---------------------------------------------------------------------------


def recipe_to_meta(recipe: ExtensionRecipe) -> dict:
    recipe = recipe.normalized()
    d = recipe.derivation
    meta: dict[str, Any] = {
        "case": recipe.case,
        "derivation": {
            "parity": d.parity,
            "images": sorted(
                [j, i] for j, im in enumerate(d.images) for i in bits(im)
            ),
        },
    }
    if recipe.alpha is not None:
        meta["alpha"] = {
            "n": recipe.alpha.n,
            "diag": sorted(bits(recipe.alpha.diag)),
            "polar": _sparse_matrix(recipe.alpha.polar, symmetric=True),
        }
    if recipe.a0 is not None:
        meta["a0"] = sorted(bits(recipe.a0))
    if recipe.m is not None:
        meta["m"] = recipe.m
    if recipe.beta_star is not None:
        meta["beta_star"] = recipe.beta_star
    return meta


def recipe_from_meta(meta: dict, dim: int) -> ExtensionRecipe:
    case = meta["case"]
    dd = meta["derivation"]
    images = [0] * dim
    for j, i in dd["images"]:
        images[j] |= 1 << i
    alpha = None
    if "alpha" in meta:
        ad = meta["alpha"]
        k = ad["n"]
        rows = [0] * k
        for i, j in ad["polar"]:
            rows[i] |= 1 << j
            if i != j:
                rows[j] |= 1 << i
        diag = 0
        for i in ad["diag"]:
            diag |= 1 << i
        alpha = QuadraticForm(k, diag, GF2Matrix(rows, k))
    a0 = None
    if "a0" in meta:
        a0 = 0
        for i in meta["a0"]:
            a0 |= 1 << i
    return ExtensionRecipe(
        case,
        Derivation(tuple(images), dd["parity"]),
        alpha=alpha,
        a0=a0,
        m=meta.get("m"),
        beta_star=meta.get("beta_star"),
    ).normalized()
