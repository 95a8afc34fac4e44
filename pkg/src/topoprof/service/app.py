"""HTTP facade over the profile toolkit.

Every endpoint is a stateless wrapper around the core package; inputs
and outputs use the same text formats as the CLI, so the CLI can run as
a thin client of this service.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import TopoprofError
from .. import dynamics, equations, factorization, reductions
from ..profiles import format_profile, parse_profile
from . import models

app = FastAPI(title="topoprof", version="0.1.0")


@app.exception_handler(TopoprofError)
async def _package_error(request: Request, exc: TopoprofError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/profile", response_model=models.ProfileResponse)
def profile(req: models.ProfileRequest):
    sys = dynamics.parse_fds(req.fds)
    return models.ProfileResponse(profile=format_profile(dynamics.profile_of(sys)))


@app.post("/realize", response_model=models.RealizeResponse)
def realize(req: models.RealizeRequest):
    sys = dynamics.realize(parse_profile(req.profile))
    if req.dot:
        return models.RealizeResponse(dot=dynamics.export_dot(sys))
    return models.RealizeResponse(fds=dynamics.serialize_fds(sys))


@app.post("/table", response_model=models.TableResponse)
def table(req: models.TableRequest):
    headers, cells = factorization.multiplication_table(req.max_size)
    return models.TableResponse(
        headers=[format_profile(h) for h in headers],
        rows=[[format_profile(c) for c in row] for row in cells],
        text=factorization.render_multiplication_table(req.max_size),
    )


@app.post("/factor", response_model=models.FactorResponse)
def factor(req: models.FactorRequest):
    p = parse_profile(req.profile)
    found = factorization.factorisations(p)
    irreducible = found == [(p,)]
    return models.FactorResponse(
        irreducible=irreducible,
        factorisations=[[format_profile(f) for f in fs] for fs in found],
    )


@app.post("/divisors", response_model=models.DivisorsResponse)
def divisors(req: models.FactorRequest):
    p = parse_profile(req.profile)
    return models.DivisorsResponse(divisors=[format_profile(d) for d in factorization.divisors(p)])


@app.post("/irreducible", response_model=models.IrreducibleResponse)
def irreducible(req: models.FactorRequest):
    p = parse_profile(req.profile)
    return models.IrreducibleResponse(irreducible=factorization.is_irreducible(p))


def _solve_payload(system: equations.EquationSystem, mode, max_candidates, threads):
    result = equations.solve(system, mode=mode, max_candidates=max_candidates, threads=threads)
    if mode == "count":
        return result, []
    if mode == "first":
        solutions = [] if result is None else [result]
    else:
        solutions = result
    return len(solutions), solutions


@app.post("/solve", response_model=models.SolveResponse)
def solve(req: models.SolveRequest):
    system = equations.parse_equation_system(req.system)
    max_candidates = req.max_candidates or equations.DEFAULT_MAX_CANDIDATES
    count, solutions = _solve_payload(system, req.mode, max_candidates, req.threads)
    return models.SolveResponse(
        count=count,
        solutions=[{v: format_profile(p) for v, p in s.items()} for s in solutions],
        text=equations.format_solutions(solutions, system.variables),
    )


@app.post("/sat", response_model=models.SatResponse)
def sat(req: models.SatRequest):
    formula = reductions.parse_cnf3(req.cnf)
    system = reductions.sat_to_system(formula)
    if req.single:
        system = equations.combine_to_single(system)
    max_candidates = req.max_candidates or equations.DEFAULT_MAX_CANDIDATES
    count, solutions = _solve_payload(system, req.mode, max_candidates, req.threads)
    booleans: list[dict[int, bool] | None] = []
    for s in solutions:
        try:
            booleans.append(reductions.solution_to_assignment(s, formula))
        except ValueError:
            booleans.append(None)
    return models.SatResponse(
        count=count,
        solutions=[{v: format_profile(p) for v, p in s.items()} for s in solutions],
        booleans=booleans,
        system=equations.format_equation_system(system),
        text=equations.format_solutions(solutions, system.variables),
    )


@app.post("/census", response_model=models.CensusResponse)
def census(req: models.CensusRequest):
    rows = factorization.census_range(req.n, cap=req.cap)
    return models.CensusResponse(
        rows=[
            models.CensusRow(
                n=r.n,
                total=r.total,
                reducible=r.reducible,
                bound=r.bound,
                ratio=f"{r.ratio.numerator}/{r.ratio.denominator}",
                ratio_float=float(r.ratio),
            )
            for r in rows
        ],
        table=factorization.format_census_table(rows),
        machine=factorization.format_census_machine(rows),
    )
