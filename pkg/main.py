"""
RETURN TIMES LAB - HTTP SERVICE
"""

import logging
from datetime import datetime
from typing import List, Optional

import uvicorn
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from cli.refs import parse_rspec, resolve_end, resolve_model
from config import APP_CONFIG, LOG_CONFIG, METAFIB_CONFIG, TWD_CONFIG, YOCCOZ_CONFIG, check_config
from errors import LabError, PreconditionFailed
from metafib import MetaFibSeq, gamma, generate, infer_r
from tree_models import CATALOG
from twd import ReturnAnalyzer, chain_r_values, validate
from yoccoz import YoccozPuzzleBuilder, parse_classes

logging.basicConfig(**LOG_CONFIG)
logger = logging.getLogger(__name__)

# ====================== INITIALIZE ======================

app = FastAPI(
    title=APP_CONFIG["name"],
    description="Meta-Fibonacci sequences, trees with dynamics and first-return times",
    version=APP_CONFIG["version"],
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# ====================== REQUEST MODELS ======================

class GenerateRequest(BaseModel):
    r: str = Field(..., description="r ref, e.g. pow2 or indicator:pow2:2:1")
    K: int = Field(..., ge=1, le=METAFIB_CONFIG["max_k"], description="Last index to generate")


class InferRequest(BaseModel):
    values: List[int] = Field(..., min_length=1, description="n_1..n_K")


class ChainRequest(BaseModel):
    model: str = Field(..., description="Model ref, e.g. binary or z2:F")
    end: str = Field(..., description="End ref, e.g. fib or periodic:01")
    l0: int = 0
    K: int = Field(..., ge=0)
    k_lo: int = 0
    n_max: Optional[int] = Field(None, ge=1)


class ValidateRequest(BaseModel):
    model: str
    depth: int = Field(TWD_CONFIG["validate_depth"], ge=0)


class YoccozRequest(BaseModel):
    classes: str = Field(..., description='Angle classes, e.g. "1/3,2/3"')
    depth: int = Field(YOCCOZ_CONFIG["max_depth"], ge=1)


# ====================== ERROR HANDLING ======================

@app.exception_handler(LabError)
async def lab_error_handler(request: Request, exc: LabError):
    logger.info(f"{request.url.path}: {exc.code}: {exc}")
    return JSONResponse(status_code=400, content=exc.to_dict())


@app.on_event("startup")
async def startup_event():
    check_config()
    logger.info(f"🚀 {APP_CONFIG['name']} ready, {len(CATALOG.get_all_models())} model kinds")


# ====================== API ENDPOINTS ======================

@app.get("/health")
async def health():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "timestamp": datetime.now().isoformat(),
        "version": APP_CONFIG["version"],
        "models": CATALOG.get_all_models(),
        "ends": CATALOG.get_all_ends(),
    }


@app.post("/metafib/generate")
def metafib_generate(payload: GenerateRequest):
    r = parse_rspec(payload.r)
    seq = generate(r, payload.K)
    return {
        "spec": r.model_dump(mode="json", exclude_none=True),
        "values": seq.values,
        "r": r.values(seq.K),
    }


@app.post("/metafib/infer")
def metafib_infer(payload: InferRequest):
    seq = MetaFibSeq.from_values(payload.values)
    return {"r": infer_r(seq).values(seq.K), "values": seq.values}


@app.get("/metafib/gamma/{r}")
def metafib_gamma(r: int, tol: Optional[float] = None):
    return gamma(r, tol).model_dump(mode="json")


@app.post("/twd/chain")
def twd_chain(payload: ChainRequest):
    analyzer = ReturnAnalyzer(resolve_model(payload.model))
    chain = analyzer.minimal_return_chain(
        resolve_end(payload.end), l0=payload.l0, K=payload.K, n_max=payload.n_max, k_lo=payload.k_lo,
    )
    try:
        r = chain_r_values(chain)
    except PreconditionFailed:
        r = None
    return {
        "k": list(chain.indices()),
        "l": chain.levels,
        "n": chain.times,
        "r": r,
        "nonrecurrent_at": chain.nonrecurrent_at,
    }


@app.post("/twd/validate")
def twd_validate(payload: ValidateRequest):
    report = validate(resolve_model(payload.model), payload.depth)
    return dict(report.model_dump(mode="json"), clean=report.clean)


@app.post("/yoccoz/build")
def yoccoz_build(payload: YoccozRequest):
    builder = YoccozPuzzleBuilder(parse_classes(payload.classes), payload.depth)
    puzzle = builder.build()
    return {
        "puzzle": puzzle.to_json(),
        "counts": {str(d): c for d, c in puzzle.counts().items()},
        "critical_nest": builder.critical_nest(),
    }


if __name__ == "__main__":
    print("\n" + "=" * 50)
    print(f"🚀 {APP_CONFIG['name'].upper()}")
    print("=" * 50)
    print(f"Starting server on http://{APP_CONFIG['host']}:{APP_CONFIG['port']}")
    print("Press Ctrl+C to stop")
    print("=" * 50 + "\n")

    uvicorn.run(
        "main:app",
        host=APP_CONFIG["host"],
        port=APP_CONFIG["port"],
        reload=APP_CONFIG["debug"],
    )
