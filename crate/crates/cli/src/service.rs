//! Stateless HTTP JSON API.
//!
//! | route | body | response |
//! |---|---|---|
//! | `GET /api/planets` | | planet records |
//! | `POST /api/curve/samples` | `{spec, n, range?, max_denominator?}` | `{params, points, closed}` |
//! | `POST /api/symmetry` | `{spec, max_denominator?}` | symmetry report |
//! | `POST /api/arcs` | `{spec, m?, samples?, max_denominator?}` | `{arcs, order_used}` |
//! | `POST /api/export/svg` | `{spec, m?, samples?, style?, max_denominator?}` | `image/svg+xml` |
//! | `POST /api/export/stl` | `{spec, tube_radius?, around?, along?, unit_scale?, max_denominator?}` | `model/stl` |
//!
//! Failures answer `{"error": kind, "detail": message}` with status 400, or
//! 422 when frequencies have no common period.

use std::path::PathBuf;

use axum::body::Bytes;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use orbitloom_core::export::{SvgStyle, DEFAULT_PALETTE};
use orbitloom_core::orbits;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use tower_http::services::ServeDir;

use crate::doc::{BuiltCurve, CurveSpecDoc};
use crate::error::AppError;
use crate::ops::{self, TubeOptions};

pub struct ApiError(AppError);

impl From<AppError> for ApiError {
    fn from(e: AppError) -> Self {
        Self(e)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match self.0 {
            AppError::Validation(_) => StatusCode::BAD_REQUEST,
            AppError::NonCommensurable(_) => StatusCode::UNPROCESSABLE_ENTITY,
            AppError::Io(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        let body = serde_json::json!({"error": self.0.kind(), "detail": self.0.to_string()});
        (status, Json(body)).into_response()
    }
}

type ApiResult = Result<Response, ApiError>;

/// API routes, plus static files from `static_dir` for every other path.
pub fn router(static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/planets", get(planets))
        .route("/api/curve/samples", post(samples))
        .route("/api/symmetry", post(symmetry))
        .route("/api/arcs", post(arcs))
        .route("/api/export/svg", post(export_svg))
        .route("/api/export/stl", post(export_stl));
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

fn parse<T: DeserializeOwned>(body: &[u8]) -> Result<T, AppError> {
    serde_json::from_slice(body).map_err(|e| AppError::Validation(format!("request body: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SampleRequest {
    spec: CurveSpecDoc,
    n: usize,
    range: Option<[f64; 2]>,
    max_denominator: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SymmetryRequest {
    spec: CurveSpecDoc,
    max_denominator: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcsRequest {
    spec: CurveSpecDoc,
    m: Option<u64>,
    samples: Option<usize>,
    style: Option<SvgStyle>,
    max_denominator: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StlRequest {
    spec: CurveSpecDoc,
    tube_radius: Option<f64>,
    around: Option<usize>,
    along: Option<usize>,
    unit_scale: Option<f64>,
    max_denominator: Option<u64>,
}

fn build(spec: &CurveSpecDoc, max_denominator: Option<u64>) -> Result<BuiltCurve, AppError> {
    spec.build(max_denominator)
}

async fn planets() -> Json<Vec<orbits::PlanetRecord>> {
    Json(orbits::planet_table())
}

async fn samples(body: Bytes) -> ApiResult {
    let req: SampleRequest = parse(&body)?;
    let built = build(&req.spec, req.max_denominator)?;
    let line = ops::sample(&built, req.n, req.range)?;
    Ok(Json(line).into_response())
}

async fn symmetry(body: Bytes) -> ApiResult {
    let req: SymmetryRequest = parse(&body)?;
    let report = ops::symmetry(&build(&req.spec, req.max_denominator)?)?;
    Ok(Json(report).into_response())
}

async fn arcs(body: Bytes) -> ApiResult {
    let req: ArcsRequest = parse(&body)?;
    if req.style.is_some() {
        return Err(AppError::Validation("style applies to /api/export/svg only".into()).into());
    }
    let built = build(&req.spec, req.max_denominator)?;
    let set = ops::arcs(&built.curve, req.m, req.samples, DEFAULT_PALETTE.len())?;
    Ok(Json(set).into_response())
}

async fn export_svg(body: Bytes) -> ApiResult {
    let req: ArcsRequest = parse(&body)?;
    let built = build(&req.spec, req.max_denominator)?;
    let style = req.style.unwrap_or_default();
    let bytes = ops::svg(&built, req.m, req.samples, &style)?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], bytes).into_response())
}

async fn export_stl(body: Bytes) -> ApiResult {
    let req: StlRequest = parse(&body)?;
    let built = build(&req.spec, req.max_denominator)?;
    let d = TubeOptions::default();
    let opts = TubeOptions {
        radius: req.tube_radius.unwrap_or(d.radius),
        around: req.around.unwrap_or(d.around),
        along: req.along.unwrap_or(d.along),
        unit_scale: req.unit_scale.unwrap_or(d.unit_scale),
    };
    let bytes = ops::stl(&built, &opts)?;
    Ok(([(header::CONTENT_TYPE, "model/stl")], bytes).into_response())
}
