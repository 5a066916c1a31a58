"""Core representation of discrete Bayesian networks.

A network is a set of named variables with ordered state labels, an acyclic
directed structure, and one conditional probability table (CPT) per variable.
State order is part of the model identity: it drives CPT row/column indexing.

CPT rows are addressed by a mixed-radix index over the parent state indices in
declared parent order, with the LAST-listed parent varying fastest.
"""

from dataclasses import dataclass, field
import math

from .errors import UnknownSymbolError, UsageError

ROW_SUM_TOL = 1e-9


@dataclass(frozen=True)
class Variable:
    name: str
    states: tuple

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))

    def state_index(self, label):
        try:
            return self.states.index(label)
        except ValueError:
            raise UnknownSymbolError(
                f"variable {self.name!r} has no state {label!r}", locus=self.name
            ) from None


@dataclass(frozen=True)
class NetworkStructure:
    variables: tuple
    edges: tuple  # (parent name, child name) pairs

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "edges", tuple((p, c) for p, c in self.edges))

    @property
    def variable_names(self):
        return [v.name for v in self.variables]

    def variable(self, name):
        for v in self.variables:
            if v.name == name:
                return v
        raise UnknownSymbolError(f"unknown variable {name!r}", locus=name)

    def has_variable(self, name):
        return any(v.name == name for v in self.variables)

    def parents_of(self, name):
        return [p for p, c in self.edges if c == name]

    def children_of(self, name):
        return [c for p, c in self.edges if p == name]


@dataclass(frozen=True)
class Cpt:
    child: str
    parents: tuple
    rows: tuple  # rows[config_index][child_state_index]

    def __post_init__(self):
        object.__setattr__(self, "parents", tuple(self.parents))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))


class BayesianNetwork:
    """Immutable network: structure plus one CPT per variable."""

    def __init__(self, structure, cpts, name="network"):
        self.name = name
        self.structure = structure
        self.cpts = {c.child: c for c in cpts}
        self._by_name = {v.name: v for v in structure.variables}

    @property
    def variables(self):
        return self.structure.variables

    def variable(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownSymbolError(f"unknown variable {name!r}", locus=name) from None

    def cpt(self, name):
        return self.cpts[name]

    def parent_config_index(self, child, parent_states):
        """Mixed-radix row index for a full parent binding of ``child``'s CPT."""
        return parent_config_index(self.cpts[child], self._by_name, parent_states)

    def check_evidence(self, bindings):
        """Validate a partial variable->state mapping, raising on bad symbols."""
        for name, state in bindings.items():
            self.variable(name).state_index(state)

    def check_assignment(self, bindings):
        """Validate a total assignment over every network variable."""
        self.check_evidence(bindings)
        missing = [v.name for v in self.variables if v.name not in bindings]
        if missing:
            raise UsageError(f"assignment is missing variables: {missing}")
        extra = [n for n in bindings if n not in self._by_name]
        if extra:
            raise UnknownSymbolError(f"assignment binds unknown variables: {extra}")


def parent_config_index(cpt, variables_by_name, parent_states):
    """Mixed-radix index over parent state indices, last parent fastest."""
    index = 0
    for parent in cpt.parents:
        if parent not in parent_states:
            raise UnknownSymbolError(f"parent {parent!r} is not bound", locus=cpt.child)
        var = variables_by_name.get(parent)
        if var is None:
            raise UnknownSymbolError(f"unknown parent variable {parent!r}", locus=cpt.child)
        index = index * len(var.states) + var.state_index(parent_states[parent])
    return index


def parent_config_count(cpt, variables_by_name):
    count = 1
    for parent in cpt.parents:
        count *= len(variables_by_name[parent].states)
    return count


@dataclass(frozen=True)
class Violation:
    kind: str
    locus: str
    message: str

    def __str__(self):
        return f"[{self.kind}] {self.locus}: {self.message}"


def validate_network(net):
    """Check every structural and CPT invariant; returns a list of violations.

    An empty list means the network is valid. Violations are data, not
    exceptions: this accepts arbitrary candidate input.
    """
    report = []
    structure = net.structure
    names = [v.name for v in structure.variables]
    seen = set()
    for n in names:
        if n in seen:
            report.append(Violation("duplicate_variable", n, "variable declared twice"))
        seen.add(n)
    by_name = {v.name: v for v in structure.variables}

    for v in structure.variables:
        if len(v.states) < 2:
            report.append(Violation("too_few_states", v.name, "needs at least 2 states"))
        if len(set(v.states)) != len(v.states):
            report.append(Violation("duplicate_state", v.name, "state labels not distinct"))
        if any(not s for s in v.states):
            report.append(Violation("empty_state", v.name, "empty state label"))

    seen_edges = set()
    for p, c in structure.edges:
        locus = f"{p}->{c}"
        if p not in by_name or c not in by_name:
            report.append(Violation("unknown_endpoint", locus, "edge endpoint not declared"))
            continue
        if p == c:
            report.append(Violation("self_loop", locus, "self-loop"))
        if (p, c) in seen_edges:
            report.append(Violation("duplicate_edge", locus, "edge declared twice"))
        seen_edges.add((p, c))

    try:
        topological_order(structure)
    except CycleError as exc:
        report.append(Violation("cycle", "->".join(exc.cycle), "directed cycle"))

    for v in structure.variables:
        cpt = net.cpts.get(v.name)
        if cpt is None:
            report.append(Violation("missing_cpt", v.name, "no CPT for variable"))
            continue
        graph_parents = set(structure.parents_of(v.name))
        if set(cpt.parents) != graph_parents:
            report.append(
                Violation(
                    "parent_mismatch",
                    v.name,
                    f"CPT parents {sorted(cpt.parents)} != graph parents {sorted(graph_parents)}",
                )
            )
            continue
        if any(p not in by_name for p in cpt.parents):
            continue
        expected_rows = parent_config_count(cpt, by_name)
        if len(cpt.rows) != expected_rows:
            report.append(
                Violation(
                    "row_count", v.name, f"expected {expected_rows} rows, got {len(cpt.rows)}"
                )
            )
            continue
        for i, row in enumerate(cpt.rows):
            locus = f"{v.name}[row {i}]"
            if len(row) != len(v.states):
                report.append(
                    Violation("row_width", locus, f"expected {len(v.states)} entries")
                )
                continue
            if any(not (0.0 <= p <= 1.0) for p in row):
                report.append(Violation("entry_range", locus, "entry outside [0,1]"))
            residual = math.fsum(row) - 1.0
            if abs(residual) > ROW_SUM_TOL:
                report.append(
                    Violation("row_sum", locus, f"row sums to 1{residual:+g}")
                )

    for extra in net.cpts:
        if extra not in by_name:
            report.append(Violation("extra_cpt", extra, "CPT for undeclared variable"))
    return report


class CycleError(UsageError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"directed cycle: {' -> '.join(self.cycle)}")


def topological_order(structure):
    """Kahn's algorithm; ties broken by variable declaration order.

    Raises CycleError carrying one cycle's variable names.
    """
    names = structure.variable_names
    indegree = {n: 0 for n in names}
    children = {n: [] for n in names}
    for p, c in structure.edges:
        indegree[c] += 1
        children[p].append(c)
    order = []
    remaining = set(names)
    while remaining:
        ready = [n for n in names if n in remaining and indegree[n] == 0]
        if not ready:
            raise CycleError(_find_cycle(remaining, structure))
        pick = ready[0]
        order.append(pick)
        remaining.discard(pick)
        for c in children[pick]:
            indegree[c] -= 1
    return order


def _find_cycle(nodes, structure):
    # every stuck node keeps a parent inside the stuck set, so walking
    # backwards must revisit a node; reversing that walk yields a cycle
    start = sorted(nodes)[0]
    path, seen = [start], {start}
    while True:
        prev = next(p for p, c in structure.edges if c == path[-1] and p in nodes)
        if prev in seen:
            return list(reversed(path[path.index(prev):]))
        path.append(prev)
        seen.add(prev)


def normalize_row(row):
    """Scale a row to sum exactly (in double precision) to 1.0.

    Idempotent: rows that already fsum to 1.0 are returned unchanged, so
    load/save round-trips are stable.
    """
    values = list(row)
    for _ in range(10):
        total = math.fsum(values)
        if total == 1.0:
            return tuple(values)
        values = [v / total for v in values]
        # compensate on the largest entry so fsum lands exactly on 1.0
        k = max(range(len(values)), key=lambda i: values[i])
        values[k] = 1.0 - math.fsum(v for i, v in enumerate(values) if i != k)
    return tuple(values)
