"""Discrete Bayesian network engine with a curriculum advisory toolkit."""

from .errors import (
    DegenerateBaselineError,
    EngineError,
    ImpossibleEvidenceError,
    ModelValidationError,
    ParseError,
    SchemaError,
    SizeLimitError,
    UnknownSymbolError,
    UsageError,
)
from .network import (
    BayesianNetwork,
    Cpt,
    CycleError,
    NetworkStructure,
    Variable,
    Violation,
    parent_config_index,
    topological_order,
    validate_network,
)
from .model_io import load_model, load_model_file, model_to_dict, save_model
from .inference import (
    Distribution,
    JointTable,
    MapResult,
    enumerate_joint,
    evidence_likelihood,
    joint_probability,
    map_assignment,
    ml_assignment,
    posterior_marginal,
)
from .learning import (
    FitReport,
    NaiveBayesModel,
    RecordSet,
    forward_sample,
    mle_fit,
    naive_bayes_predict,
    naive_bayes_train,
)
from .impact import (
    ImpactEntry,
    ImpactReport,
    TargetSpec,
    conditional_mutual_information,
    d_separated,
    impact_level,
    impact_ranking,
)
from .curriculum import (
    DEFAULT_WEIGHTS,
    OUTCOME_VARIABLES,
    PROFILE_VARIABLES,
    PlanReport,
    ScenarioOutcome,
    build_default_model,
    compare_plans,
    default_model_document,
    evaluate_plan,
    synthetic_cohort_csv,
)

__version__ = "0.1.0"
