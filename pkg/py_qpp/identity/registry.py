"""
registry contains the map from check ids to identity checks and the runners.
"""
from __future__ import annotations
from typing import Dict, Iterable, List, Optional, Type

from loguru import logger

from py_qpp import model as md
from py_qpp.identity import congruence, hypergeometric, overpartition, partition, quintuple, spt
from . import IdentityCheck, IdentityReport, UnknownCheckId


class CheckMap:
    """
    CheckMap is the map between check ids & the corresponding identity check classes.
    The order of MAP is the order reports are emitted in.
    """

    CHECKS: List[Type[IdentityCheck]] = [
        partition.Pentagonal,
        partition.GfPar,
        partition.EulerProduct,
        partition.Gordon,
        partition.Jtp,
        partition.Psi,
        partition.DissparEven,
        partition.DissparOdd,
        partition.Slater38,
        partition.Slater39,
        partition.SelfConjGf,
        partition.Claim1,
        partition.ParLemma,
        partition.ParLemmaOdd,
        partition.DiffEuler,
        partition.DiffPsc,
        partition.LogDiffSp,
        congruence.CongP5,
        congruence.CongP7,
        congruence.CongP11,
        congruence.CongSpt5,
        congruence.CongSpt7,
        congruence.CongSpt13,
        spt.GfSpt,
        spt.GfSptNew,
        spt.SptPn,
        spt.WatsonSpl,
        spt.Diff2,
        spt.BloSpt,
        spt.Th3,
        spt.SptMod,
        spt.Ded13,
        spt.EtaTheta,
        quintuple.DzqForms,
        quintuple.Qpi,
        quintuple.QpiHalf,
        quintuple.QuintupleDeriv,
        quintuple.SptAna,
        quintuple.Deri4th,
        quintuple.DiffkLemma,
        hypergeometric.MainId,
        hypergeometric.ChanMao1,
        hypergeometric.ChanMao2,
        hypergeometric.Bibasic1,
        hypergeometric.Bibasic2,
        overpartition.PairCount,
        overpartition.BloRank,
        overpartition.CorBlo,
        overpartition.BloCoeff,
        overpartition.IdenP,
        overpartition.Symmetry,
        overpartition.Symmetry1,
        overpartition.ChebyshevGenfun,
    ]

    MAP: Dict[str, Type[IdentityCheck]] = {c.ID: c for c in CHECKS}

    @classmethod
    def get_check_cls(cls, check_id: str) -> Type[IdentityCheck]:
        """
        get_check_cls gets the check class registered under the id.

        Args:
            check_id (str): The check id.

        Raises:
            UnknownCheckId: If the id is not registered.

        Returns:
            Type[IdentityCheck]: The check class.
        """
        check_id = md.CheckID(check_id).data
        try:
            return cls.MAP[check_id]
        except KeyError:
            raise UnknownCheckId(f"Unknown check id {check_id!r}") from None

    @classmethod
    def ids(cls) -> List[str]:
        return list(cls.MAP)


if len(CheckMap.MAP) != len(CheckMap.CHECKS):
    raise RuntimeError("Check ids must be unique")


def run_check(check_id: str, order: Optional[int] = None) -> IdentityReport:
    """
    run_check runs the check registered under the id.

    Args:
        check_id (str): The check id.
        order (Optional[int], optional): The truncation order. Defaults to the check's default order.

    Raises:
        UnknownCheckId: If the id is not registered.

    Returns:
        IdentityReport: The report.
    """
    cls = CheckMap.get_check_cls(check_id)
    return cls().run(order)


def run_all(order: Optional[int] = None, ids: Optional[Iterable[str]] = None) -> List[IdentityReport]:
    """
    run_all runs the given checks, or every registered check, in registry order.

    Args:
        order (Optional[int], optional): The truncation order. Defaults to each check's default order.
        ids (Optional[Iterable[str]], optional): The check ids. Defaults to all of them.

    Raises:
        UnknownCheckId: If an id is not registered.

    Returns:
        List[IdentityReport]: The reports.
    """
    selected = CheckMap.ids() if ids is None else list(ids)
    # resolve every id before running anything
    classes = [CheckMap.get_check_cls(i) for i in selected]
    reports = [cls().run(order) for cls in classes]
    failed = [r.id for r in reports if not r.passed]
    logger.debug(f"ran {len(reports)} checks, failed: {failed}")
    return reports
