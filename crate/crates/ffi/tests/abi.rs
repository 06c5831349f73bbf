use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use latin3_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    l3_string_free(s);
    owned
}

fn last_error() -> String {
    let p = l3_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn counts_cross_as_decimal_strings() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(l3_riordan_l3(3, &mut s), L3Status::Ok);
        assert_eq!(take(s), "2");
        assert_eq!(l3_aps_g(1, 3, &mut s), L3Status::Ok);
        assert_eq!(take(s), "6");
        assert_eq!(l3_thm3_g(2, 4, &mut s), L3Status::Ok);
        assert_eq!(take(s), "264");
        assert_eq!(l3_g_npq_closed(1, 1, 0, 3, &mut s), L3Status::Ok);
        assert_eq!(take(s), "12");
        assert_eq!(l3_gen_derangement(4, 3, 2, &mut s), L3Status::Ok);
        assert_eq!(take(s), "14");
        assert_eq!(
            l3_count_injections_forbidden(4, 3, 2, 1_000_000, &mut s),
            L3Status::Ok
        );
        assert_eq!(take(s), "14");
        assert_eq!(l3_count_latin(3, 3, true, 1_000_000, &mut s), L3Status::Ok);
        assert_eq!(take(s), "2");
        // 20-digit values survive
        assert_eq!(l3_riordan_l3(20, &mut s), L3Status::Ok);
        assert!(take(s).len() > 20);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(l3_thm3_g(3, 2, &mut s), L3Status::InvalidArgument);
        assert!(s.is_null());
        assert!(last_error().contains("lambda >= n"));
        assert_eq!(l3_aps_g(1, 3, ptr::null_mut()), L3Status::NullPointer);
        assert_eq!(
            l3_count_latin(3, 6, false, 10, &mut s),
            L3Status::LimitExceeded
        );
        assert!(last_error().contains("budget"));

        let mut g = ptr::null_mut();
        let bad = CString::new("3\n0 1\n1 1\n").unwrap();
        assert_eq!(l3_graph_parse(bad.as_ptr(), &mut g), L3Status::ParseError);
        assert!(last_error().starts_with("line 3"));
        assert_eq!(l3_graph_parse(ptr::null(), &mut g), L3Status::NullPointer);
        assert_eq!(
            l3_graph_build_gnpq(2, 2, 1, &mut g),
            L3Status::InvalidArgument
        );

        assert_eq!(l3_graph_build_gn(5, &mut g), L3Status::Ok);
        let mut p = ptr::null_mut();
        assert_eq!(l3_chromatic_poly(g, 0, &mut p), L3Status::LimitExceeded);
        assert!(p.is_null());
        l3_graph_free(g);
    }
}

#[test]
fn graph_and_polynomial_handles() {
    unsafe {
        let text = CString::new("# triangle\n3\n0 1\n1 2\n0 2\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(l3_graph_parse(text.as_ptr(), &mut g), L3Status::Ok);
        assert_eq!(l3_graph_vertex_count(g), 3);
        assert_eq!(l3_graph_edge_count(g), 3);
        let mut s = ptr::null_mut();
        assert_eq!(l3_graph_to_text(g, &mut s), L3Status::Ok);
        assert_eq!(take(s), "3\n0 1\n0 2\n1 2\n");

        let mut p = ptr::null_mut();
        assert_eq!(l3_chromatic_poly(g, 0, &mut p), L3Status::Ok);
        assert_eq!(l3_poly_degree(p), 3);
        let coeffs: Vec<String> = (0..5)
            .map(|i| {
                let mut c = ptr::null_mut();
                assert_eq!(l3_poly_coeff(p, i, &mut c), L3Status::Ok);
                take(c)
            })
            .collect();
        assert_eq!(coeffs, ["0", "2", "-3", "1", "0"]);
        assert_eq!(l3_poly_eval(p, 3, &mut s), L3Status::Ok);
        assert_eq!(take(s), "6");
        assert_eq!(
            l3_count_colorings_bruteforce(g, 3, 1000, &mut s),
            L3Status::Ok
        );
        assert_eq!(take(s), "6");
        l3_poly_free(p);
        l3_graph_free(g);

        assert_eq!(l3_graph_build_gnpq(3, 1, 1, &mut g), L3Status::Ok);
        assert_eq!(l3_graph_vertex_count(g), 8);
        l3_graph_free(g);

        assert_eq!(l3_poly_degree(ptr::null()), -1);
        assert_eq!(l3_graph_vertex_count(ptr::null()), 0);
        l3_graph_free(ptr::null_mut());
        l3_poly_free(ptr::null_mut());
        l3_string_free(ptr::null_mut());
    }
}
