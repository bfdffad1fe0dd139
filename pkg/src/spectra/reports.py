"""
Verdict and report records returned by the spectral operations.

Every boolean verdict carries a certificate that can be re-checked exactly.
Polynomials serialize as ascending coefficient strings, rationals as "p/q",
isolating intervals as [lo, hi].
"""
from fractions import Fraction
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, model_validator
from typing_extensions import Annotated

from src.algebra.poly import Poly
from src.algebra.roots import RootInterval


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, str):
        return Poly.parse(value)
    return Poly.from_json(value)


def _as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(str(value))


def _as_interval(value) -> RootInterval:
    if isinstance(value, RootInterval):
        return value
    lo, hi = value
    return RootInterval(_as_fraction(lo), _as_fraction(hi))


PolyField = Annotated[Poly, PlainValidator(_as_poly), PlainSerializer(lambda p: p.to_json(), return_type=list)]
RationalField = Annotated[Fraction, PlainValidator(_as_fraction), PlainSerializer(str, return_type=str)]
IntervalField = Annotated[RootInterval, PlainValidator(_as_interval), PlainSerializer(lambda r: r.to_json(), return_type=list)]


class Record(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class BadMu(Record):
    """A Spec_M(G) member that makes f - mu*g repeat a root."""
    mu_polynomial: PolyField
    mu_intervals: List[IntervalField]
    root_intervals: List[IntervalField]


class SeparabilityVerdict(Record):
    """
    Squarefreeness verdict of a characteristic polynomial.

    Attributes:
        separable: True iff all M-eigenvalues are distinct
        repeated_factor: monic gcd(Phi, Phi'); the constant 1 when separable
        multiple_roots: isolating intervals of the real roots of repeated_factor
        attribution: which rooted-product condition fails, if any
        common_factor: gcd(f, g) when the root is not a Wronskian vertex
        bad_mu: eigenvalues of G producing a repeated root in f - mu*g
        routes: verdict of every independent route that was computed
    """
    subject: str
    kind: str
    separable: bool
    repeated_factor: PolyField
    multiple_roots: List[IntervalField] = Field(default_factory=list)
    attribution: Optional[Literal["g-inseparable", "common-factor", "bad-mu", "h-inseparable", "shared-difference"]] = None
    common_factor: Optional[PolyField] = None
    bad_mu: List[BadMu] = Field(default_factory=list)
    routes: Dict[str, bool] = Field(default_factory=dict)


class WronskianReport(Record):
    vertex: int
    kind: str
    is_wronskian: bool
    w_polynomial: PolyField
    gcd: PolyField
    real_root_count: int
    convention: Optional[str] = None


class SpectrumFactor(Record):
    """Product eigenvalues contributed by one squarefree factor p of phi_M(G)."""
    mu_factor: PolyField
    multiplicity: int
    factor_polynomial: PolyField
    rational_mu: Optional[RationalField] = None


class RootedSpectrum(Record):
    product_charpoly: PolyField
    factors: List[SpectrumFactor]
    direct_charpoly: PolyField
    routes_agree: bool


class ControllabilityReport(Record):
    """Walk-matrix rank of M(G) and the derived controllability verdict."""
    order: int
    rank: int
    connected: bool
    controllable: bool
    main_eigenvalue_count: int
    left_kernel_vector: Optional[List[RationalField]] = None

    @model_validator(mode="after")
    def _rank_bounded(self):
        if not 0 <= self.rank <= self.order:
            raise ValueError(f"rank {self.rank} outside 0..{self.order}")
        return self


class FactorRank(Record):
    factor: PolyField
    rank: int


class BmuVerdict(Record):
    controllable: bool
    universal: bool
    locus: PolyField
    real_root_count: int
    shared_factor: Optional[PolyField] = None
    factor_ranks: List[FactorRank] = Field(default_factory=list)
    routes: Dict[str, bool] = Field(default_factory=dict)


class RootedControllabilityReport(Record):
    product: ControllabilityReport
    g_report: ControllabilityReport
    h_gcd: PolyField
    bmu: BmuVerdict
    decomposition_full_rank: bool
    direct_full_rank: bool


class FamilyMember(Record):
    n: int
    order: int
    pendant: int
    verified: bool
    gcd: PolyField
    graph: str


class CospectralPairReport(Record):
    order: int
    charpoly_1: PolyField
    charpoly_2: PolyField
    cospectral: bool
    separable_1: bool
    separable_2: bool
    factors_isomorphic: bool
    non_isomorphic: bool
    canonical_confirmation: Optional[bool] = None
    flags: List[str] = Field(default_factory=list)


class AlphaSweepReport(Record):
    vertex: int
    grid: List[RationalField]
    hits: List[RationalField]


class AdjugateIdentityReport(Record):
    vertex: int
    holds: bool
    difference: PolyField


class CensusRow(Record):
    """One line of the census table."""
    order: int
    total: int
    separable: int
    controllable: int
    wronskian: int
    controllable_wronskian: int

    @model_validator(mode="after")
    def _counts_ordered(self):
        if not self.controllable <= self.separable <= self.total:
            raise ValueError("census counts violate controllable <= separable <= total")
        if self.controllable_wronskian > min(self.controllable, self.wronskian):
            raise ValueError("controllable_wronskian exceeds its bounds")
        return self

    def as_tsv(self) -> str:
        return "\t".join(str(v) for v in (
            self.order, self.total, self.separable, self.controllable,
            self.wronskian, self.controllable_wronskian,
        ))


TSV_HEADER = "order\ttotal\tseparable\tcontrollable\twronskian\tcontrollable_wronskian"


class SubsetObservation(Record):
    """Whether every controllable graph of a source has a Wronskian vertex."""
    holds: bool
    controllable_count: int
    counterexamples: List[str] = Field(default_factory=list)


class CospectralClass(Record):
    charpoly: PolyField
    graphs: List[str]

    @property
    def spectrum_unique(self) -> bool:
        return len(self.graphs) == 1


class DmsSpotcheckReport(Record):
    """Cospectral rooted products over one order class compared against isomorphism."""
    max_order: int
    root: int
    spectrum_unique: int
    pairs_checked: int
    violations: List[str] = Field(default_factory=list)
