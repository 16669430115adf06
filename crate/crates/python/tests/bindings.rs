use pyo3::prelude::*;
use pyo3::types::PyDict;

use circle_orbit_py::circle_orbit_py;

fn run(code: &str) {
    pyo3::append_to_inittab!(circle_orbit_py);
    Python::with_gil(|py| {
        let code = std::ffi::CString::new(code).unwrap();
        let globals = PyDict::new(py);
        py.run(&code, Some(&globals), None).unwrap_or_else(|e| {
            e.print(py);
            panic!("python snippet failed");
        });
    });
}

#[test]
fn bindings_round_trip() {
    run(r#"
import json
import circle_orbit_py as co

ring = co.RingModulus([1, -1, -1, -1, 1])
assert ring.power(5).coeffs == [-1, 0, 2, 2]
u = ring.element([3, -1, 0, 2])
assert (u * ring.alpha()).conjugate() == u.conjugate() * ring.power(-1)
assert co.classify([1, 0, -1, 0, 1])["class"] == "Cyclotomic(12)"
assert co.egyptian(2, 2, -1) == (-1, 1, 1, -2)
t = co.InnerProductTriple(json.dumps({"alpha": "-1/2", "beta": "-1/2", "gamma": "-1/2"}))
assert t.gram_residual() == "0"
try:
    co.circle_points([1, -1, -1, -1, 1], 4, cap=10)
    raise AssertionError("cap ignored")
except co.ResourceCapError:
    pass
"#);
}
