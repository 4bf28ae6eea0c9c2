"""Request / response models of the certification service."""
from __future__ import annotations

from pydantic import BaseModel, Field


class QSqrt2Model(BaseModel):
    """a + b*sqrt2 with exact rational strings 'p/q'."""

    a: str = "0/1"
    b: str = "0/1"


class ParamsModel(BaseModel):
    a: QSqrt2Model
    b: QSqrt2Model
    c: QSqrt2Model = QSqrt2Model()
    d: QSqrt2Model
    e: QSqrt2Model
    f: QSqrt2Model = QSqrt2Model()
    g: QSqrt2Model
    h: QSqrt2Model = QSqrt2Model()
    i: QSqrt2Model


class CertifyRequest(BaseModel):
    params: ParamsModel | None = None
    include_text: bool = True


class CertifyResponse(BaseModel):
    passed: bool
    total: int
    base: int
    additional: int
    certificate: dict
    text: str | None = None


class SampleRequest(BaseModel):
    seed: int = Field(ge=0)
    count: int = Field(default=1, ge=1, le=16)


class SampleResponse(BaseModel):
    samples: list[dict]
    totals: list[int]
    all_generic: bool


class ShowResponse(BaseModel):
    target: str
    content: str


class RenderRequest(BaseModel):
    resolution: int = Field(default=48, ge=8, le=256)
    bounds: float = Field(default=3.0, gt=0)
    jobs: int = Field(default=1, ge=1, le=32)


class RenderResponse(BaseModel):
    obj: str
    vertices: int
    faces: int


class HealthResponse(BaseModel):
    status: str
    version: str
    schema_id: str
