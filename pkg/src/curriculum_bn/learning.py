"""Parameter learning from complete data, naive Bayes, and forward sampling.

Estimation is frequency counting with optional Laplace smoothing:

    P(child=s | parents=cfg) = (N(s, cfg) + k) / (N(cfg) + k * |child states|)

Unseen parent configurations at smoothing 0 become uniform rows (and are
flagged in the fit report) so the fitted model is always a valid network.
"""

from dataclasses import dataclass, field
import io

import numpy as np

from .errors import ImpossibleEvidenceError, ParseError, UnknownSymbolError, UsageError
from .network import (
    BayesianNetwork,
    Cpt,
    NetworkStructure,
    Variable,
    normalize_row,
    topological_order,
)
from .inference import Distribution


@dataclass(frozen=True)
class RecordSet:
    """Complete-data table: one column per variable, cells are state labels."""

    columns: tuple
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        for r in self.rows:
            if len(r) != len(self.columns):
                raise ParseError(
                    f"row has {len(r)} cells, expected {len(self.columns)}"
                )

    def __len__(self):
        return len(self.rows)

    def column(self, name):
        try:
            i = self.columns.index(name)
        except ValueError:
            raise UnknownSymbolError(f"no column {name!r} in record set") from None
        return [r[i] for r in self.rows]

    def to_csv(self):
        out = io.StringIO()
        out.write(",".join(self.columns) + "\n")
        for r in self.rows:
            out.write(",".join(r) + "\n")
        return out.getvalue()

    @classmethod
    def from_csv(cls, text):
        lines = [ln for ln in text.splitlines() if ln != ""]
        if not lines:
            raise ParseError("empty CSV document")
        header = tuple(lines[0].split(","))
        return cls(header, tuple(tuple(ln.split(",")) for ln in lines[1:]))


@dataclass
class FitReport:
    """Bookkeeping from mle_fit: which parent configurations were never seen."""

    rows_used: int = 0
    unseen_configs: list = field(default_factory=list)  # (child, config index)


def _state_codes(structure, data):
    """Integer-coded columns for every structure variable; validates labels."""
    codes = {}
    for v in structure.variables:
        lookup = {s: i for i, s in enumerate(v.states)}
        column = data.column(v.name)
        try:
            codes[v.name] = np.array([lookup[x] for x in column], dtype=np.int64)
        except KeyError as exc:
            raise UnknownSymbolError(
                f"column {v.name!r} contains undeclared state {exc.args[0]!r}",
                locus=v.name,
            ) from None
    return codes


def mle_fit(structure, data, smoothing=0.0, report=None):
    """Fit one CPT per variable by (smoothed) frequency counting."""
    if smoothing < 0:
        raise UsageError("smoothing must be >= 0")
    if len(data) == 0:
        raise UsageError("empty dataset")
    codes = _state_codes(structure, data)
    if report is None:
        report = FitReport()
    report.rows_used = len(data)

    cpts = []
    for v in structure.variables:
        parents = structure.parents_of(v.name)
        arity = len(v.states)
        n_configs = 1
        for p in parents:
            n_configs *= len(structure.variable(p).states)
        # mixed-radix config index per record, last parent fastest
        config = np.zeros(len(data), dtype=np.int64)
        for p in parents:
            config = config * len(structure.variable(p).states) + codes[p]
        flat = config * arity + codes[v.name]
        counts = np.bincount(flat, minlength=n_configs * arity).reshape(n_configs, arity)
        rows = []
        for cfg in range(n_configs):
            n_cfg = counts[cfg].sum()
            if n_cfg == 0 and smoothing == 0:
                report.unseen_configs.append((v.name, cfg))
                rows.append(tuple([1.0 / arity] * arity))
                continue
            denom = n_cfg + smoothing * arity
            rows.append(
                normalize_row([(counts[cfg][s] + smoothing) / denom for s in range(arity)])
            )
        cpts.append(Cpt(v.name, tuple(parents), tuple(rows)))
    return BayesianNetwork(structure, cpts, name="fitted")


# ---------------------------------------------------------------------------
# naive Bayes


@dataclass(frozen=True)
class NaiveBayesModel:
    """Star-topology classifier: class variable -> each attribute."""

    network: BayesianNetwork
    class_var: str
    attributes: tuple

    @property
    def class_states(self):
        return self.network.variable(self.class_var).states

    def prior(self):
        return self.network.cpts[self.class_var].rows[0]

    def conditional(self, attribute, class_state):
        cpt = self.network.cpts[attribute]
        row_index = self.network.parent_config_index(
            attribute, {self.class_var: class_state}
        )
        return cpt.rows[row_index]


def naive_bayes_train(class_var, attr_vars, variables, data, smoothing=0.0):
    """Fit a naive Bayes model; `variables` supplies the state vocabularies."""
    if not attr_vars:
        raise UsageError("at least one attribute variable is required")
    by_name = {v.name: v for v in variables}
    for name in [class_var, *attr_vars]:
        if name not in by_name:
            raise UnknownSymbolError(f"no declared variable {name!r}")
    star_vars = tuple(by_name[n] for n in [class_var, *attr_vars])
    edges = tuple((class_var, a) for a in attr_vars)
    structure = NetworkStructure(star_vars, edges)
    net = mle_fit(structure, data, smoothing=smoothing)
    return NaiveBayesModel(net, class_var, tuple(attr_vars))


def naive_bayes_predict(model, attrs):
    """Argmax_v P(v) * prod_i P(a_i | v); ties broken by class state order.

    Returns (class label, normalized Distribution over class states).
    """
    for a in model.attributes:
        if a not in attrs:
            raise UsageError(f"attribute {a!r} is not bound")
    net = model.network
    for a, s in attrs.items():
        net.variable(a).state_index(s)
    states = model.class_states
    scores = []
    for j, v_state in enumerate(states):
        score = model.prior()[j]
        for a in model.attributes:
            row = model.conditional(a, v_state)
            score *= row[net.variable(a).state_index(attrs[a])]
        scores.append(score)
    z = sum(scores)
    if z <= 0.0:
        raise ImpossibleEvidenceError("every class has score zero for these attributes")
    probs = tuple(s / z for s in scores)
    best = max(range(len(states)), key=lambda j: (scores[j], -j))
    return states[best], Distribution(model.class_var, states, probs)


# ---------------------------------------------------------------------------
# forward (ancestral) sampling


def forward_sample(net, n, seed):
    """Draw n records by ancestral sampling in topological order.

    Deterministic for a given (net, n, seed) within this implementation;
    cross-implementation bit-exactness is not promised.
    """
    if n < 1:
        raise UsageError("sample count must be >= 1")
    rng = np.random.default_rng(seed)
    order = topological_order(net.structure)
    columns = [v.name for v in net.variables]
    samples = {}  # variable -> int array of state indices
    for name in order:
        v = net.variable(name)
        cpt = net.cpts[name]
        rows = np.asarray(cpt.rows, dtype=float)
        config = np.zeros(n, dtype=np.int64)
        for p in cpt.parents:
            config = config * len(net.variable(p).states) + samples[p]
        cumulative = np.cumsum(rows, axis=1)[config]  # (n, arity)
        u = rng.random(n)
        samples[name] = np.minimum(
            (u[:, None] > cumulative).sum(axis=1), len(v.states) - 1
        )
    state_lookup = {c: np.array(net.variable(c).states, dtype=object) for c in columns}
    data = [state_lookup[c][samples[c]] for c in columns]
    rows = tuple(tuple(str(cell) for cell in rec) for rec in zip(*data))
    return RecordSet(tuple(columns), rows)
