"""Per-complex consistency audit used by the ``suite`` command."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .collapse import certify_lc_step, is_collapsible, is_nonevasive
from .coloring import is_linear_coloring, lchr
from .complex import SimplicialComplex
from .errors import BudgetExhausted, InvalidTrace
from .homology import reduced_homology
from .oracles import lchr_bruteforce
from .reduction import DEFAULT_BUDGET, LowerBound, lc_core_and_lindim, primitive_reductions
from .verify import verify_trace

ORACLE_LIMIT = 6


@dataclass
class AuditRow:
    index: int
    n_vertices: int
    n_facets: int
    dim: int
    lchr: int
    lchr_oracle: int | None
    lindim: int
    lindim_exact: bool
    n_cores: int
    homdim: int
    homology: str
    irreducible: bool
    nonevasive: bool
    collapsible: bool | None
    primitive_steps: int
    certificates_ok: bool
    homology_invariant: bool
    bound_ok: bool
    facets: str

    @property
    def ok(self):
        oracle = self.lchr_oracle is None or self.lchr_oracle == self.lchr
        return oracle and self.certificates_ok and self.homology_invariant and self.bound_ok

    def as_dict(self):
        out = asdict(self)
        out["ok"] = self.ok
        return out


COLUMNS = list(AuditRow.__dataclass_fields__) + ["ok"]


def audit_complex(d: SimplicialComplex, index=0, budget=DEFAULT_BUDGET) -> AuditRow:
    k, kappa = lchr(d)
    if not is_linear_coloring(d, kappa):
        raise AssertionError("lchr witness is not linear")
    oracle = lchr_bruteforce(d) if d.n_vertices <= ORACLE_LIMIT else None
    h = reduced_homology(d)

    cores, ld = lc_core_and_lindim(d, budget)
    exact = not isinstance(ld, LowerBound)
    ld = int(ld)

    pairs = primitive_reductions(d)
    certs = True
    invariant = True
    for kept, removed in pairs:
        target = d.deletion(removed)
        ne, coll = certify_lc_step(d, kept, removed)
        try:
            verify_trace(ne, target)
            verify_trace(coll, target)
        except InvalidTrace:
            certs = False
        if reduced_homology(target) != h:
            invariant = False

    try:
        collapsible = is_collapsible(d, budget)
    except BudgetExhausted:
        collapsible = None

    return AuditRow(
        index=index,
        n_vertices=d.n_vertices,
        n_facets=len(d.facets),
        dim=d.dim,
        lchr=k,
        lchr_oracle=oracle,
        lindim=ld,
        lindim_exact=exact,
        n_cores=len(cores),
        homdim=h.homdim,
        homology=str(h),
        irreducible=not pairs,
        nonevasive=is_nonevasive(d),
        collapsible=collapsible,
        primitive_steps=len(pairs),
        certificates_ok=certs,
        homology_invariant=invariant,
        bound_ok=k >= ld >= h.homdim + 2 if exact else k >= ld,
        facets=" ".join(",".join(d.label(v) for v in f) for f in d.sorted_facets()),
    )
