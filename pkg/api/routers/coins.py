"""
Coins router - HTTP endpoints for casting coined walks
"""
from fastapi import APIRouter
from typing import List, Optional
from pydantic import BaseModel, Field

from api.routers.experiments import raise_http
from api.services.coins import cast_to_szegedy, check_double_castability, coin_set_from_dict
import logging

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/api/coins", tags=["coins"])


class CoinEntry(BaseModel):
    node: int
    neighbors: Optional[List[int]] = None
    matrix: list


class CoinSetRequest(BaseModel):
    n: int = Field(ge=1)
    edges: List[List[int]] = Field(default_factory=list)
    self_loops: List[int] = Field(default_factory=list)
    coins: List[CoinEntry]
    tol: Optional[float] = Field(default=None, gt=0)


def _parse(request: CoinSetRequest):
    return coin_set_from_dict(request.model_dump(exclude={"tol"}, exclude_none=True))


@router.post("/cast")
def cast_coins_endpoint(request: CoinSetRequest):
    """
    Cast a coin set into a graph-phased Szegedy walk.
    Returns 400 when a coin is not unitary or not castable.
    """
    try:
        logger.info(f"🔧 Casting coin set on {request.n} nodes")
        coin_set, adjacency = _parse(request)
        result = cast_to_szegedy(coin_set, adjacency, tol=request.tol)
        logger.info(f"✅ Cast as {result.lemma_class.value}")
        return result.to_dict()
    except Exception as e:
        raise_http(e, "casting coins")


@router.post("/double-check")
def double_check_endpoint(request: CoinSetRequest):
    """Compare the squared coined operator with the squared Szegedy operator"""
    try:
        logger.info(f"🔧 Double-castability check on {request.n} nodes")
        coin_set, adjacency = _parse(request)
        kwargs = {} if request.tol is None else {"tol": request.tol}
        report = check_double_castability(coin_set, adjacency, **kwargs)
        logger.info(f"✅ Double-castability: {report.status}")
        return report.to_dict()
    except Exception as e:
        raise_http(e, "checking double castability")
