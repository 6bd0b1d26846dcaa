//! Worked examples. Each one pins the brute-force answer first and only then
//! compares the closed form against it.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;

use simcore::counting::{
    average_size_formula, cat, count_abc, count_firstcor, count_largest, count_largest_exact,
    count_largest_second, count_ssd, count_ssd3, count_via_lattice,
};
use simcore::extremal::{
    construct_largest_selfconj_sss, largest_size_ab, largest_size_selfconj_sss, largest_size_sss,
    selfconj_gap,
};
use simcore::oracle::{enumerate_all_cores, enumerate_cores_by_largest_part, OracleStats};
use simcore::{CoreSpec, Error, Partition};

fn cores(moduli: &[u64]) -> Vec<Partition> {
    enumerate_all_cores(&CoreSpec::new(moduli.iter().copied()).unwrap()).unwrap()
}

fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

#[test]
fn pair_counts() {
    assert_eq!(cores(&[2, 3]), vec![p(&[]), p(&[1])]);
    assert_eq!(cores(&[3, 4]), vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2]), p(&[3, 1, 1])]);
    assert_eq!(cores(&[4, 5]).len(), 14);
    assert_eq!(cat(2, 3).unwrap(), big(2));
    assert_eq!(cat(3, 4).unwrap(), big(5));
    assert_eq!(cat(4, 5).unwrap(), big(14));
}

#[test]
fn pair_statistics() {
    let stats = OracleStats::from_cores(&cores(&[3, 4]));
    assert_eq!((stats.count, stats.max_size), (5, 5));
    assert_eq!(stats.maximizers, vec![p(&[3, 1, 1])]);
    assert_eq!(stats.mean_size(), Some(Ratio::from_integer(BigInt::from(2))));
    assert_eq!(average_size_formula(3, 4).unwrap(), Ratio::from_integer(BigInt::from(2)));
    assert_eq!(largest_size_ab(3, 4).unwrap(), big(5));

    let stats = OracleStats::from_cores(&cores(&[2, 3]));
    assert_eq!((stats.count, stats.max_size), (2, 1));
    let half = Ratio::new(BigInt::from(1), BigInt::from(2));
    assert_eq!(stats.mean_size(), Some(half.clone()));
    assert_eq!(average_size_formula(2, 3).unwrap(), half);
    assert_eq!(largest_size_ab(2, 3).unwrap(), big(1));
}

#[test]
fn one_is_a_trivial_modulus() {
    assert_eq!(average_size_formula(1, 7).unwrap(), Ratio::from_integer(BigInt::from(0)));
    assert_eq!(largest_size_ab(1, 7).unwrap(), big(0));
    assert_eq!(count_ssd(1, 4).unwrap(), big(1));
    assert_eq!(count_ssd3(1, 1).unwrap(), big(1));
}

#[test]
fn largest_part_examples() {
    let found = enumerate_cores_by_largest_part(3, 2, None, None).unwrap();
    assert_eq!(found, vec![p(&[2]), p(&[2, 1, 1]), p(&[2, 2, 1, 1])]);
    assert_eq!(count_largest(3, 2).unwrap(), big(3));

    assert_eq!(enumerate_cores_by_largest_part(3, 2, None, Some(1)).unwrap().len(), 2);
    assert_eq!(count_largest_exact(3, 2, 1).unwrap(), big(2));
    assert_eq!(enumerate_cores_by_largest_part(3, 2, None, Some(2)).unwrap(), vec![p(&[2, 2, 1, 1])]);
    assert_eq!(count_largest_exact(3, 2, 2).unwrap(), big(1));
    assert!(enumerate_cores_by_largest_part(3, 2, None, Some(3)).unwrap().is_empty());
    assert_eq!(count_largest_exact(3, 2, 3).unwrap(), big(0));

    assert_eq!(enumerate_cores_by_largest_part(2, 3, None, None).unwrap(), vec![p(&[3, 2, 1])]);
    assert_eq!(count_largest(2, 3).unwrap(), big(1));
    assert_eq!(count_largest(5, 0).unwrap(), big(1));

    assert_eq!(enumerate_cores_by_largest_part(3, 2, Some(1), None).unwrap(), vec![p(&[2, 1, 1])]);
    assert_eq!(count_largest_second(3, 2, 1).unwrap(), big(1));
    assert_eq!(
        enumerate_cores_by_largest_part(3, 3, Some(1), None).unwrap(),
        vec![p(&[3, 1]), p(&[3, 1, 1])]
    );
    assert_eq!(count_largest_second(3, 3, 1).unwrap(), big(2));
    assert!(enumerate_cores_by_largest_part(3, 5, Some(1), None).unwrap().is_empty());
    assert_eq!(count_largest_second(3, 5, 1).unwrap(), big(0));
}

#[test]
fn lattice_counts() {
    assert_eq!(cores(&[2, 3]).len(), 2);
    assert_eq!(count_via_lattice(3, 2, &[]).unwrap(), big(2));
    assert_eq!(cores(&[2, 3, 4]).len(), 2);
    assert_eq!(count_via_lattice(3, 2, &[4]).unwrap(), big(2));
    assert_eq!(count_firstcor(3, 2, 4).unwrap(), big(2));
    assert_eq!(cores(&[3, 4, 5]).len(), 4);
    assert_eq!(count_via_lattice(4, 3, &[5]).unwrap(), big(4));
    assert_eq!(count_firstcor(4, 3, 5).unwrap(), big(4));
}

#[test]
fn progression_counts() {
    assert_eq!(cores(&[3, 4, 5]), vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2])]);
    assert_eq!(count_ssd(3, 1).unwrap(), big(4));
    assert_eq!(count_ssd(2, 1).unwrap(), big(2));
    assert_eq!(cores(&[2, 3, 4, 5]).len(), 2);
    assert_eq!(count_ssd3(2, 1).unwrap(), big(2));
    assert_eq!(cores(&[3, 4, 5, 6]).len(), 4);
    assert_eq!(count_ssd3(3, 1).unwrap(), big(4));
}

#[test]
fn three_moduli_counts() {
    assert_eq!(cores(&[4, 5, 6]).len(), 9);
    assert_eq!(count_abc(4, 5, 6).unwrap(), big(9));
    assert_eq!(cores(&[4, 5, 14]).len(), 14);
    assert_eq!(count_abc(4, 5, 14).unwrap(), cat(4, 5).unwrap());
    assert_eq!(
        count_abc(4, 5, 7),
        Err(Error::NotDivisible { a: 4, what: "2b+c", value: 17 })
    );
}

#[test]
fn consecutive_triples() {
    let stats = OracleStats::from_cores(&cores(&[3, 4, 5]));
    assert_eq!(stats.max_size, 2);
    assert_eq!(stats.maximizers, vec![p(&[1, 1]), p(&[2])]);
    assert_eq!(largest_size_sss(3).unwrap(), big(2));
    assert_eq!(stats.self_conjugate_max(), (1, vec![p(&[1])]));
    assert_eq!(largest_size_selfconj_sss(3).unwrap(), big(1));
    assert_eq!(selfconj_gap(3).unwrap(), big(1));
    assert_eq!(construct_largest_selfconj_sss(3).unwrap(), (p(&[1]), big(1)));

    assert_eq!(OracleStats::from_cores(&cores(&[2, 3, 4])).max_size, 1);
    assert_eq!(largest_size_sss(2).unwrap(), big(1));
    assert_eq!(largest_size_sss(1).unwrap(), big(0));
    assert_eq!(largest_size_selfconj_sss(1).unwrap(), big(0));
    assert_eq!(selfconj_gap(1).unwrap(), big(0));
    assert_eq!(construct_largest_selfconj_sss(1).unwrap(), (p(&[]), big(0)));

    let stats = OracleStats::from_cores(&cores(&[4, 5, 6]));
    assert_eq!(stats.self_conjugate_max(), (7, vec![p(&[4, 1, 1, 1])]));
    assert_eq!(largest_size_selfconj_sss(4).unwrap(), big(7));
    assert_eq!(construct_largest_selfconj_sss(4).unwrap(), (p(&[4, 1, 1, 1]), big(7)));
    assert_eq!(selfconj_gap(4), Err(Error::EvenS(4)));

    let stats = OracleStats::from_cores(&cores(&[7, 8, 9]));
    let gap = stats.max_size - stats.self_conjugate_max().0;
    assert_eq!(gap, 12);
    assert_eq!(selfconj_gap(7).unwrap(), big(12));
}
