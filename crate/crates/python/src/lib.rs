//! Python bindings: exact field-tower elements, multivariate polynomials,
//! Gram lattices, and the named computations of the library as module
//! functions. Structured results cross as plain dicts and lists; exact
//! rationals cross as strings to avoid float rounding.

use num_bigint::BigInt;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};

use hquartic::conics;
use hquartic::family;
use hquartic::heisenberg;
use hquartic::klein;
use hquartic::kummer;
use hquartic::lattice;
use hquartic::tower::{parse_rat, rat_string, FieldElement, Rat, Tower};
use hquartic::verify as acceptance;
use hquartic::MPoly;

fn value_err(msg: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(msg.to_string())
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(a) => {
            let items: Vec<Bound<'py, PyAny>> =
                a.iter().map(|x| json_to_py(py, x)).collect::<PyResult<_>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, val) in o {
                d.set_item(k, json_to_py(py, val)?)?;
            }
            d.into_any()
        }
    })
}

fn extract_rat(obj: &Bound<'_, PyAny>) -> PyResult<Rat> {
    if let Ok(n) = obj.extract::<i64>() {
        return Ok(hquartic::tower::rat(n));
    }
    if let Ok(s) = obj.extract::<String>() {
        return parse_rat(&s).map_err(value_err);
    }
    Err(value_err("expected an int or a rational string like '3/4'"))
}

fn extract_rats(objs: Vec<Bound<'_, PyAny>>, expect: usize, what: &str) -> PyResult<Vec<Rat>> {
    if objs.len() != expect {
        return Err(value_err(format!(
            "{what} needs {expect} coordinates, got {}",
            objs.len()
        )));
    }
    objs.iter().map(extract_rat).collect()
}

fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_string).collect()
}

fn u6(objs: Vec<Bound<'_, PyAny>>) -> PyResult<[Rat; 6]> {
    let v = extract_rats(objs, 6, "a family parameter")?;
    let u: [Rat; 6] = v.try_into().unwrap();
    if !family::on_u_hyperplane(&u) {
        return Err(value_err("parameter coordinates must sum to zero"));
    }
    Ok(u)
}

fn p4(objs: Vec<Bound<'_, PyAny>>) -> PyResult<[Rat; 4]> {
    Ok(extract_rats(objs, 4, "a point")?.try_into().unwrap())
}

/// An element of an iterated quadratic extension of the rationals.
#[pyclass(name = "Element", from_py_object)]
#[derive(Clone)]
struct PyElement {
    inner: FieldElement,
}

fn unify(a: &FieldElement, b: &FieldElement) -> PyResult<(FieldElement, FieldElement)> {
    let (ta, tb) = (a.tower(), b.tower());
    if ta == tb {
        Ok((a.clone(), b.clone()))
    } else if ta.is_prefix_of(tb) {
        Ok((a.lift_to(tb), b.clone()))
    } else if tb.is_prefix_of(ta) {
        Ok((a.clone(), b.lift_to(ta)))
    } else {
        Err(value_err("elements live in incompatible field extensions"))
    }
}

#[pymethods]
impl PyElement {
    /// Builds a rational element from an int or a string like '-3/7'.
    #[staticmethod]
    fn rational(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        let r = extract_rat(value)?;
        Ok(PyElement {
            inner: Tower::rationals().from_rat(r),
        })
    }

    /// The imaginary unit, generator of Q(i).
    #[staticmethod]
    fn i() -> Self {
        PyElement {
            inner: Tower::gaussian().generator(0),
        }
    }

    /// sqrt(2) in Q(i, sqrt 2).
    #[staticmethod]
    fn sqrt2() -> Self {
        PyElement {
            inner: Tower::gaussian_sqrt2().generator(1),
        }
    }

    fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
        let (a, b) = unify(&self.inner, &other.inner)?;
        Ok(PyElement { inner: a.add(&b) })
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
        let (a, b) = unify(&self.inner, &other.inner)?;
        Ok(PyElement { inner: a.sub(&b) })
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        let (a, b) = unify(&self.inner, &other.inner)?;
        Ok(PyElement { inner: a.mul(&b) })
    }

    fn __truediv__(&self, other: &PyElement) -> PyResult<PyElement> {
        let (a, b) = unify(&self.inner, &other.inner)?;
        a.div(&b)
            .map(|inner| PyElement { inner })
            .map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> PyElement {
        PyElement {
            inner: self.inner.neg(),
        }
    }

    fn __eq__(&self, other: &PyElement) -> PyResult<bool> {
        let (a, b) = unify(&self.inner, &other.inner)?;
        Ok(a == b)
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_rational(&self) -> bool {
        self.inner.is_rational()
    }

    /// Square root within the same field, sign-normalized; None if absent.
    fn sqrt(&self) -> Option<PyElement> {
        self.inner.sqrt().map(|inner| PyElement { inner })
    }

    fn inverse(&self) -> PyResult<PyElement> {
        self.inner
            .inv()
            .map(|inner| PyElement { inner })
            .map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    /// Coordinates over the tower basis, as rational strings.
    fn coords(&self) -> Vec<String> {
        rat_strings(self.inner.coords())
    }

    /// Human-readable description of the ambient field.
    fn field(&self) -> String {
        self.inner.tower().describe()
    }
}

/// A multivariate polynomial with coefficients in a field tower.
#[pyclass(name = "Poly", skip_from_py_object)]
#[derive(Clone)]
struct PyPoly {
    inner: MPoly,
}

fn default_names(nvars: usize) -> Vec<String> {
    match nvars {
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        5 => (0..5).map(|i| format!("a{i}")).collect(),
        _ => (0..nvars).map(|i| format!("x{i}")).collect(),
    }
}

fn same_ring(a: &MPoly, b: &MPoly) -> PyResult<()> {
    if a.nvars() != b.nvars() {
        return Err(value_err("polynomials have different variable counts"));
    }
    if a.tower() != b.tower() {
        return Err(value_err("polynomials have different coefficient fields"));
    }
    Ok(())
}

#[pymethods]
impl PyPoly {
    /// The i-th coordinate variable in an nvars-variable ring over Q.
    #[staticmethod]
    fn variable(nvars: usize, i: usize) -> PyResult<Self> {
        if i >= nvars {
            return Err(value_err("variable index out of range"));
        }
        Ok(PyPoly {
            inner: MPoly::var(nvars, i, &Tower::rationals()),
        })
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        same_ring(&self.inner, &other.inner)?;
        Ok(PyPoly {
            inner: self.inner.add(&other.inner),
        })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        same_ring(&self.inner, &other.inner)?;
        Ok(PyPoly {
            inner: self.inner.sub(&other.inner),
        })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        same_ring(&self.inner, &other.inner)?;
        Ok(PyPoly {
            inner: self.inner.mul(&other.inner),
        })
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly {
            inner: self.inner.neg(),
        }
    }

    fn __eq__(&self, other: &PyPoly) -> PyResult<bool> {
        same_ring(&self.inner, &other.inner)?;
        Ok(self.inner.sub(&other.inner).is_zero())
    }

    fn __pow__(&self, e: u32, modulo: Option<&Bound<'_, PyAny>>) -> PyResult<PyPoly> {
        if modulo.is_some() {
            return Err(value_err("modular exponentiation is not defined here"));
        }
        Ok(PyPoly {
            inner: self.inner.pow(e),
        })
    }

    fn __str__(&self) -> String {
        let names = default_names(self.inner.nvars());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.inner.display(&refs)
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.__str__())
    }

    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    fn partial(&self, i: usize) -> PyResult<PyPoly> {
        if i >= self.inner.nvars() {
            return Err(value_err("variable index out of range"));
        }
        Ok(PyPoly {
            inner: self.inner.partial(i),
        })
    }

    /// Exponent vectors with coefficient strings, leading term first.
    fn terms(&self) -> Vec<(Vec<u16>, String)> {
        self.inner
            .terms()
            .map(|(m, c)| (m.exps().to_vec(), c.to_string()))
            .collect()
    }

    /// Evaluates at a point of ints, rational strings, or Elements.
    fn eval(&self, point: Vec<Bound<'_, PyAny>>) -> PyResult<PyElement> {
        if point.len() != self.inner.nvars() {
            return Err(value_err(format!(
                "expected {} coordinates",
                self.inner.nvars()
            )));
        }
        let t = self.inner.tower().clone();
        let coords: Vec<FieldElement> = point
            .iter()
            .map(|obj| {
                if let Ok(e) = obj.extract::<PyElement>() {
                    if e.inner.tower() == &t {
                        return Ok(e.inner);
                    }
                    if e.inner.tower().is_prefix_of(&t) {
                        return Ok(e.inner.lift_to(&t));
                    }
                    return Err(value_err("element lives outside the coefficient field"));
                }
                extract_rat(obj).map(|r| t.from_rat(r))
            })
            .collect::<PyResult<_>>()?;
        Ok(PyElement {
            inner: self.inner.eval(&coords),
        })
    }

    /// Hessian determinant (4-variable polynomials).
    fn hessian(&self) -> PyResult<PyPoly> {
        if self.inner.nvars() != 4 {
            return Err(value_err("hessian is defined for 4-variable polynomials"));
        }
        Ok(PyPoly {
            inner: family::hessian(&self.inner),
        })
    }
}

/// An integral lattice presented by its Gram matrix.
#[pyclass(name = "Lattice", skip_from_py_object)]
#[derive(Clone)]
struct PyLattice {
    inner: lattice::GramLattice,
}

fn big_rows(rows: Vec<Vec<BigInt>>) -> PyResult<lattice::GramLattice> {
    let labels = (0..rows.len()).map(|i| format!("e{i}")).collect();
    lattice::GramLattice::new(labels, rows).map_err(value_err)
}

#[pymethods]
impl PyLattice {
    #[new]
    fn new(gram: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(PyLattice {
            inner: big_rows(gram)?,
        })
    }

    /// The rank-15 positive definite laminated lattice.
    #[staticmethod]
    fn lambda15() -> Self {
        PyLattice {
            inner: lattice::lambda15(),
        }
    }

    /// The 16-conic sublattice of the Picard group, signature (1,15).
    #[staticmethod]
    fn picard_m() -> Self {
        PyLattice {
            inner: lattice::conic16_lattice(),
        }
    }

    #[staticmethod]
    fn hyperbolic() -> Self {
        PyLattice {
            inner: lattice::hyperbolic_plane(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Lattice(dim={})", self.inner.dim())
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn gram(&self) -> Vec<Vec<BigInt>> {
        self.inner.gram.clone()
    }

    fn det(&self) -> BigInt {
        lattice::det_exact(&self.inner.gram)
    }

    fn rank(&self) -> usize {
        lattice::rank(&self.inner.gram)
    }

    /// (positive, negative) inertia indices; None when degenerate.
    fn signature(&self) -> Option<(usize, usize)> {
        lattice::signature(&self.inner.gram).ok()
    }

    fn is_even(&self) -> bool {
        lattice::is_even(&self.inner.gram)
    }

    fn norm(&self, v: Vec<BigInt>) -> PyResult<BigInt> {
        self.check_len(&v)?;
        Ok(lattice::norm_of(&self.inner.gram, &v))
    }

    fn product(&self, v: Vec<BigInt>, w: Vec<BigInt>) -> PyResult<BigInt> {
        self.check_len(&v)?;
        self.check_len(&w)?;
        Ok(lattice::product_of(&self.inner.gram, &v, &w))
    }

    /// Integral x with Gram·x = target, or None when only a rational
    /// solution exists. Raises when the system is inconsistent.
    fn solve(&self, target: Vec<BigInt>) -> PyResult<Option<Vec<BigInt>>> {
        self.check_len(&target)?;
        lattice::solve_integral(&self.inner.gram, &target).map_err(value_err)
    }

    /// Sublattice orthogonal to v: (lattice, basis in ambient coordinates).
    fn orthogonal_complement(&self, v: Vec<BigInt>) -> PyResult<(PyLattice, Vec<Vec<BigInt>>)> {
        self.check_len(&v)?;
        let (lat, basis) = lattice::orth_complement(&self.inner, &v).map_err(value_err)?;
        Ok((PyLattice { inner: lat }, basis))
    }

    /// Index of the full-rank sublattice spanned by the given vectors.
    fn sublattice_index(&self, vectors: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
        for v in &vectors {
            self.check_len(v)?;
        }
        lattice::sublattice_index(&self.inner, &vectors).map_err(value_err)
    }

    /// All nonzero vectors of norm at most bound (definite lattices).
    fn short_vectors(&self, bound: i64) -> PyResult<Vec<Vec<BigInt>>> {
        lattice::short_vectors(&self.inner.gram, bound).map_err(value_err)
    }

    fn minimum_norm(&self) -> PyResult<BigInt> {
        lattice::minimum_norm(&self.inner.gram).map_err(value_err)
    }

    /// The same module with the negated form.
    fn negated(&self) -> Self {
        let gram = lattice::negate(&self.inner.gram);
        PyLattice {
            inner: lattice::GramLattice::new(self.inner.labels.clone(), gram)
                .expect("negation preserves symmetry"),
        }
    }
}

impl PyLattice {
    fn check_len(&self, v: &[BigInt]) -> PyResult<()> {
        if v.len() != self.inner.dim() {
            return Err(value_err(format!(
                "vector length {} does not match lattice dimension {}",
                v.len(),
                self.inner.dim()
            )));
        }
        Ok(())
    }
}

// ---- group and line geometry ----

#[pyfunction]
fn group_order() -> usize {
    heisenberg::enumerate_group().len()
}

#[pyfunction]
fn center_size() -> usize {
    heisenberg::center().len()
}

#[pyfunction]
fn lift(g: u8) -> PyResult<Vec<Vec<i64>>> {
    if g >= 16 {
        return Err(value_err("labels are 0..15"));
    }
    Ok(heisenberg::lift(g).iter().map(|r| r.to_vec()).collect())
}

#[pyfunction]
fn symplectic(a: u8, b: u8) -> PyResult<u8> {
    if a >= 16 || b >= 16 {
        return Err(value_err("labels are 0..15"));
    }
    Ok(heisenberg::symplectic(a, b))
}

#[pyfunction]
fn fix_lines<'py>(py: Python<'py>, g: u8) -> PyResult<Bound<'py, PyAny>> {
    if g == 0 || g >= 16 {
        return Err(value_err("labels of fix lines are 1..15"));
    }
    let report: Vec<serde_json::Value> = heisenberg::fix_lines_of(g)
        .iter()
        .map(|l| {
            serde_json::json!({
                "owner": l.owner,
                "eigenvalue": l.eigenvalue.to_string(),
                "span": l.span.iter().map(|pt| {
                    pt.iter().map(|e| e.to_string()).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            })
        })
        .collect();
    json_to_py(py, &serde_json::Value::Array(report))
}

#[pyfunction]
fn fix_line_count() -> usize {
    heisenberg::all_fix_lines().len()
}

// ---- the quartic family ----

#[pyfunction]
fn quartic(u: Vec<Bound<'_, PyAny>>) -> PyResult<PyPoly> {
    Ok(PyPoly {
        inner: family::f_u(&u6(u)?),
    })
}

#[pyfunction]
fn discriminant(u: Vec<Bound<'_, PyAny>>) -> PyResult<String> {
    Ok(rat_string(&family::singular_discriminant(&u6(u)?)))
}

#[pyfunction]
fn is_smooth(u: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
    use num_traits::Zero;
    Ok(!family::singular_discriminant(&u6(u)?).is_zero())
}

#[pyfunction]
fn segre_nodes() -> Vec<Vec<String>> {
    family::segre_nodes().iter().map(|p| rat_strings(p)).collect()
}

#[pyfunction]
fn t_points() -> Vec<Vec<String>> {
    family::t_points().iter().map(|p| rat_strings(p)).collect()
}

#[pyfunction]
#[pyo3(signature = (seed = 1))]
fn igusa_relation(seed: u64) -> PyPoly {
    PyPoly {
        inner: family::igusa_relation(seed),
    }
}

// ---- Kummer seeding and conics ----

#[pyfunction]
fn kummer_param(p: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<String>> {
    let u = kummer::kummer_param_at(&p4(p)?).map_err(value_err)?;
    Ok(rat_strings(&u))
}

#[pyfunction]
fn seed_kummer<'py>(py: Python<'py>, p: Vec<Bound<'_, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
    let seed = kummer::build_seed(&p4(p)?).map_err(value_err)?;
    let (per_trope, per_node) = kummer::incidence_profile(&seed);
    let report = serde_json::json!({
        "parameter": rat_strings(&seed.param),
        "quartic": seed.quartic.display(&["x", "y", "z", "w"]),
        "nodes": seed.nodes16.iter().map(|n| rat_strings(n)).collect::<Vec<_>>(),
        "tropes": seed.tropes16.iter().map(|n| rat_strings(n)).collect::<Vec<_>>(),
        "nodes_per_trope": per_trope,
        "tropes_per_node": per_node,
    });
    json_to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (p, node = 0, t = None))]
fn split_conics<'py>(
    py: Python<'py>,
    p: Vec<Bound<'_, PyAny>>,
    node: usize,
    t: Option<i64>,
) -> PyResult<Bound<'py, PyAny>> {
    let seed = kummer::build_seed(&p4(p)?).map_err(value_err)?;
    let nodes = family::segre_nodes();
    let q = nodes
        .get(node)
        .ok_or_else(|| value_err(format!("node index out of range 0..{}", nodes.len() - 1)))?;
    let (u, chosen) = match t {
        Some(t) => {
            let raw: Vec<Rat> = (0..6)
                .map(|i| &seed.param[i] + &q[i] * hquartic::tower::rat(t))
                .collect();
            let u: [Rat; 6] = kummer::primitive_vector(&raw).try_into().unwrap();
            (u, t)
        }
        None => kummer::choose_line_parameter(&seed, q),
    };
    let splits = kummer::split_all_tropes(&u, &seed, q).map_err(value_err)?;
    let report = serde_json::json!({
        "u": rat_strings(&u),
        "t": chosen,
        "field": splits[0].scale.tower().describe(),
        "conics": splits.iter().map(|s| serde_json::json!({
            "trope": rat_strings(&s.trope),
            "first": s.first.form.display(&["s", "t", "u"]),
            "second": s.second.form.display(&["s", "t", "u"]),
        })).collect::<Vec<_>>(),
    });
    json_to_py(py, &report)
}

#[pyfunction]
fn mukai_counts(u: Vec<Bound<'_, PyAny>>) -> PyResult<(usize, usize)> {
    kummer::mukai_counts(&u6(u)?).map_err(value_err)
}

// ---- Klein coordinates ----

fn gaussian_point(objs: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<FieldElement>> {
    let t = Tower::gaussian();
    Ok(extract_rats(objs, 4, "a point")?
        .into_iter()
        .map(|r| t.from_rat(r))
        .collect())
}

#[pyfunction]
fn klein_line(a: Vec<Bound<'_, PyAny>>, b: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<String>> {
    let (a, b) = (gaussian_point(a)?, gaussian_point(b)?);
    let m = hquartic::linalg::Mat::from_rows(&Tower::gaussian(), vec![a.clone(), b.clone()]);
    if m.rank() != 2 {
        return Err(value_err("the two points must be projectively distinct"));
    }
    Ok(klein::klein_from_points(&a, &b)
        .iter()
        .map(|e| e.to_string())
        .collect())
}

#[pyfunction]
fn lines_meet(
    a1: Vec<Bound<'_, PyAny>>,
    b1: Vec<Bound<'_, PyAny>>,
    a2: Vec<Bound<'_, PyAny>>,
    b2: Vec<Bound<'_, PyAny>>,
) -> PyResult<bool> {
    let x = klein::klein_from_points(&gaussian_point(a1)?, &gaussian_point(b1)?);
    let y = klein::klein_from_points(&gaussian_point(a2)?, &gaussian_point(b2)?);
    Ok(klein::coplanar(&x, &y))
}

#[pyfunction]
fn fermat_line_count() -> usize {
    klein::fermat_lines().len()
}

#[pyfunction]
fn fermat_gram() -> Vec<Vec<i64>> {
    klein::line_gram(&klein::fermat_lines())
}

// ---- reducible-conic configuration ----

#[pyfunction]
fn incidence_set() -> Vec<u8> {
    conics::incidence_set()
}

#[pyfunction]
fn reducible_conics() -> Vec<(u8, u8)> {
    conics::reducible_conics()
}

#[pyfunction]
fn conic_gram() -> Vec<Vec<i64>> {
    conics::gram_reducible()
}

#[pyfunction]
#[pyo3(signature = (include_h = true))]
fn conic_gram_full(include_h: bool) -> Vec<Vec<i64>> {
    conics::gram_full320(include_h)
}

#[pyfunction]
fn picard_submatrix() -> Vec<Vec<i64>> {
    conics::submatrix_m(conics::FROZEN_CONVENTION)
}

// ---- acceptance suite ----

#[pyfunction]
#[pyo3(signature = (only = None, seed = 1))]
fn verify<'py>(py: Python<'py>, only: Option<String>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let reports = acceptance::run_suite(only.as_deref(), seed);
    if reports.is_empty() {
        return Err(value_err("no criterion matches the given name"));
    }
    let arr: Vec<serde_json::Value> = reports.iter().map(|r| r.json()).collect();
    json_to_py(py, &serde_json::Value::Array(arr))
}

#[pymodule]
fn hquartic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyLattice>()?;
    m.add_function(wrap_pyfunction!(group_order, m)?)?;
    m.add_function(wrap_pyfunction!(center_size, m)?)?;
    m.add_function(wrap_pyfunction!(lift, m)?)?;
    m.add_function(wrap_pyfunction!(symplectic, m)?)?;
    m.add_function(wrap_pyfunction!(fix_lines, m)?)?;
    m.add_function(wrap_pyfunction!(fix_line_count, m)?)?;
    m.add_function(wrap_pyfunction!(quartic, m)?)?;
    m.add_function(wrap_pyfunction!(discriminant, m)?)?;
    m.add_function(wrap_pyfunction!(is_smooth, m)?)?;
    m.add_function(wrap_pyfunction!(segre_nodes, m)?)?;
    m.add_function(wrap_pyfunction!(t_points, m)?)?;
    m.add_function(wrap_pyfunction!(igusa_relation, m)?)?;
    m.add_function(wrap_pyfunction!(kummer_param, m)?)?;
    m.add_function(wrap_pyfunction!(seed_kummer, m)?)?;
    m.add_function(wrap_pyfunction!(split_conics, m)?)?;
    m.add_function(wrap_pyfunction!(mukai_counts, m)?)?;
    m.add_function(wrap_pyfunction!(klein_line, m)?)?;
    m.add_function(wrap_pyfunction!(lines_meet, m)?)?;
    m.add_function(wrap_pyfunction!(fermat_line_count, m)?)?;
    m.add_function(wrap_pyfunction!(fermat_gram, m)?)?;
    m.add_function(wrap_pyfunction!(incidence_set, m)?)?;
    m.add_function(wrap_pyfunction!(reducible_conics, m)?)?;
    m.add_function(wrap_pyfunction!(conic_gram, m)?)?;
    m.add_function(wrap_pyfunction!(conic_gram_full, m)?)?;
    m.add_function(wrap_pyfunction!(picard_submatrix, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
