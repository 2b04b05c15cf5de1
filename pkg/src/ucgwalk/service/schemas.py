"""Pydantic request models for the HTTP service.

Responses are emitted as canonically-encoded JSON (sorted keys, fixed float
formatting) so identical requests return byte-identical bodies; they are
therefore built as plain Response objects rather than response models.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class SpectrumRequest(BaseModel):
    n: int = Field(ge=2)
    format: Literal["json", "csv"] = "json"


class GraphRequest(BaseModel):
    n: int = Field(ge=2)


class EvolveRequest(BaseModel):
    n: int = Field(ge=2)
    t: float | str
    method: Literal["spectral", "oracle"] = "spectral"


class EvolveProfileRequest(BaseModel):
    n: int = Field(ge=2)
    grid: int = Field(default=4096, ge=16)


class PeriodRequest(BaseModel):
    n: int = Field(ge=2)


class DetectRequest(BaseModel):
    n: int = Field(ge=2)
    u: int = Field(ge=0)
    v: int = Field(ge=0)
    t: float | str
    tol: float = Field(default=1e-8, gt=0)
    method: Literal["spectral", "oracle"] = "spectral"


class ScanRequest(BaseModel):
    n: int = Field(ge=2)
    u: int | None = Field(default=None, ge=0)
    v: int | None = Field(default=None, ge=0)
    grid: int = Field(default=4096, ge=16)
    tol: float = Field(default=1e-8, gt=0)


class ScanProfileRequest(BaseModel):
    n: int = Field(ge=2)
    u: int | None = Field(default=None, ge=0)
    v: int | None = Field(default=None, ge=0)
    grid: int = Field(default=4096, ge=16)


class VerifyRequest(BaseModel):
    n_first: int = Field(ge=2)
    n_last: int = Field(ge=2)
    grid: int = Field(default=4096, ge=16)
    tol: float = Field(default=1e-8, gt=0)
