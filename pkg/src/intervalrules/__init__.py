"""High-utility interval rule mining over databases of labelled time intervals."""

from .datagen import GenParams, generate
from .formats import parse_database, parse_rules, read_database, write_database, write_rules
from .mining import MiningConfig, MiningStats, mine
from .model import (
    DataError,
    ESequence,
    IntervalDatabase,
    IntervalEvent,
    IntervalRule,
    MinedRule,
    load_validate,
)
from .oracle import enumerate_rules, oracle_mine
from .relations import Relation, RelationCode, classify, relation_matrix, sequence_relations

__all__ = [
    "DataError",
    "ESequence",
    "GenParams",
    "IntervalDatabase",
    "IntervalEvent",
    "IntervalRule",
    "MinedRule",
    "MiningConfig",
    "MiningStats",
    "Relation",
    "RelationCode",
    "classify",
    "enumerate_rules",
    "generate",
    "load_validate",
    "mine",
    "oracle_mine",
    "parse_database",
    "parse_rules",
    "read_database",
    "relation_matrix",
    "sequence_relations",
    "write_database",
    "write_rules",
]
