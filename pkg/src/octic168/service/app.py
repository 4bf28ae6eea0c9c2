"""FastAPI service wrapping the certification toolkit.

The CLI is a thin client of these endpoints; long computations run
synchronously (certification takes seconds, sampling up to a minute).
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..certify import CERT_SCHEMA, build_certificate, family_sample_check
from ..mesh import mesh_to_obj, render_surface
from ..mpoly import MPoly
from ..surface import OcticParams, build_F, build_P, build_q, endrass_params
from .models import (
    CertifyRequest,
    CertifyResponse,
    HealthResponse,
    RenderRequest,
    RenderResponse,
    SampleRequest,
    SampleResponse,
    ShowResponse,
)

SHOW_TARGETS = ("P", "q", "F", "params", "final-equation")


def _params_from_model(model) -> OcticParams:
    data = {k: getattr(model, k).model_dump() for k in "abcdefghi"}
    return OcticParams.from_json(data)


def _show_content(target: str) -> str:
    params = endrass_params()
    if target == "P":
        return build_P().to_text()
    if target == "q":
        return build_q(params).to_text()
    if target == "F":
        return build_F(params).to_text()
    if target == "params":
        lines = [f"{k} = {v}" for k, v in params.as_dict().items()]
        return "\n".join(lines)
    if target == "final-equation":
        scaled = build_F(params).scale(256)
        return "256*F = " + scaled.to_text()
    raise KeyError(target)


def create_app() -> FastAPI:
    app = FastAPI(title="octic168", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__, schema_id=CERT_SCHEMA)

    @app.get("/api/v1/show/{target}", response_model=ShowResponse)
    def show(target: str):
        if target not in SHOW_TARGETS:
            raise HTTPException(status_code=404, detail=f"unknown target {target!r}")
        return ShowResponse(target=target, content=_show_content(target))

    @app.post("/api/v1/certify", response_model=CertifyResponse)
    def certify(req: CertifyRequest):
        params = _params_from_model(req.params) if req.params else None
        try:
            cert = build_certificate(params)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return CertifyResponse(
            passed=cert.passed,
            total=cert.total,
            base=cert.base_total,
            additional=cert.extra_total,
            certificate=cert.to_json(),
            text=cert.to_text() if req.include_text else None,
        )

    @app.post("/api/v1/sample", response_model=SampleResponse)
    def sample(req: SampleRequest):
        samples = []
        totals = []
        for k in range(req.count):
            s = family_sample_check(req.seed + k)
            samples.append(s.to_json())
            totals.append(s.total)
        return SampleResponse(
            samples=samples,
            totals=totals,
            all_generic=all(t == 112 for t in totals),
        )

    @app.post("/api/v1/render", response_model=RenderResponse)
    def render(req: RenderRequest):
        surface = build_F(endrass_params())
        mesh = render_surface(surface, req.resolution, req.bounds, req.jobs)
        return RenderResponse(
            obj=mesh_to_obj(mesh),
            vertices=mesh.vertex_count,
            faces=mesh.face_count,
        )

    return app
