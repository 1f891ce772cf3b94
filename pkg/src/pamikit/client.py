"""Client used by the CLI: in-process by default, HTTP when a base URL
is given.  Both paths speak the pydantic request/response models from
:mod:`pamikit.service`."""

from __future__ import annotations

import httpx

from .errors import LengthMismatch, PamiError
from . import service


class ServiceClient:
    def __init__(self, url: str | None = None, timeout: float = 600.0):
        self.url = url.rstrip("/") if url else None
        self.timeout = timeout

    def _call(self, endpoint: str, handler, request, response_model):
        if self.url is None:
            return handler(request)
        resp = httpx.post(
            f"{self.url}{endpoint}", json=request.model_dump(), timeout=self.timeout
        )
        if resp.status_code == 400:
            detail = resp.json().get("detail", {})
            code = detail.get("code") if isinstance(detail, dict) else None
            message = detail.get("message", resp.text) if isinstance(detail, dict) else resp.text
            if code == "length_mismatch":
                raise LengthMismatch(message)
            raise PamiError(message)
        resp.raise_for_status()
        return response_model.model_validate(resp.json())

    def compare(self, req: service.CompareRequest) -> service.CompareResponse:
        return self._call("/metrics/compare", service.compare_labelings, req, service.CompareResponse)

    def info(self, req: service.InfoRequest) -> service.InfoResponse:
        return self._call("/metrics/info", service.labeling_info, req, service.InfoResponse)

    def profile(self, req: service.ProfileRequest) -> service.ReportResponse:
        return self._call("/experiments/profile", service.run_profile, req, service.ReportResponse)

    def precision(self, req: service.PrecisionRequest) -> service.ReportResponse:
        return self._call("/experiments/precision", service.run_precision, req, service.ReportResponse)

    def timing(self, req: service.TimingRequest) -> service.ReportResponse:
        return self._call("/experiments/timing", service.run_timing, req, service.ReportResponse)
