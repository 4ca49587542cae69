"""
Experiments router - HTTP endpoints for running simulator scenarios
"""
from fastapi import APIRouter, HTTPException, status

from api.errors import SimulationError
from api.services.experiments import ExperimentConfig, run_experiment
import logging

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/api/experiments", tags=["experiments"])


def raise_http(e: Exception, action: str):
    """Translate a service error into an HTTPException"""
    error_str = str(e)
    logger.error(f"❌ Error {action}: {error_str}")
    if isinstance(e, SimulationError):
        raise HTTPException(status_code=e.http_status, detail=error_str)
    raise HTTPException(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        detail=f"Failed {action}: {error_str}"
    )


# Sync endpoints: FastAPI runs them in its threadpool, the kernel is CPU-bound
@router.post("/run")
def run_experiment_endpoint(config: ExperimentConfig):
    """
    Run one scenario and return its record as JSON.
    Graphs must be given inline; the server never reads or writes files.
    """
    if config.graph_file is not None or config.out is not None:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail="graph_file and out are CLI-only; pass the graph inline"
        )

    try:
        logger.info(f"🚶 Running {config.scenario.value} over HTTP")
        record = run_experiment(config)
        logger.info(f"✅ Finished {config.scenario.value}")
        return record.model_dump(mode="json")
    except Exception as e:
        raise_http(e, "running experiment")
