from .config import (
    GenConfig,
    InvalidConfigError,
    load_gen_config,
    parse_gen_config,
    parse_gen_config_fields,
)
from .degree import (
    ConstantDegree,
    DegreeFunction,
    FractionDegree,
    LogDegree,
    SqrtDegree,
    degree_of,
    parse_degree,
)
from .generate import generate, generate_many, node_rng, sample_node
