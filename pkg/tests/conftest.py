"""Shared cached builders so heavy objects are constructed once per session."""

from functools import lru_cache

from coxcat import ClusterComplex, CpfComplex, Group, NcLattice, PfPoset, parse_type


@lru_cache(maxsize=None)
def group(label: str) -> Group:
    return Group(parse_type(label))


@lru_cache(maxsize=None)
def nc(label: str) -> NcLattice:
    return NcLattice(group(label))


@lru_cache(maxsize=None)
def cluster(label: str, m: int = 1) -> ClusterComplex:
    return ClusterComplex(group(label), m, nc(label))


@lru_cache(maxsize=None)
def cpf(label: str, m: int = 1, positive: bool = False) -> CpfComplex:
    return CpfComplex(group(label), m, positive=positive,
                      cluster=cluster(label, m), pf=pf(label))


@lru_cache(maxsize=None)
def pf(label: str) -> PfPoset:
    return PfPoset(group(label), nc(label))
