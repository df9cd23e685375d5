mod snf {
    use kanlim::palgebra::snf::*;
    use kanlim::palgebra::*;
    use kanlim::Error;

    fn check(m: &Matrix, p: u64) -> Snf {
        let s = snf(m, p, SnfFlags::ALL).unwrap();
        let l = s.left.as_ref().unwrap();
        let r = s.right.as_ref().unwrap();
        assert_eq!(l.mul(m).mul(r), s.d_matrix(p));
        assert!(l.mul(s.left_inv.as_ref().unwrap()) == Matrix::identity(m.rows()));
        assert!(r.mul(s.right_inv.as_ref().unwrap()) == Matrix::identity(m.cols()));
        s
    }

    #[test]
    fn diag_two_three() {
        let m = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let (u, d, v) = plocal_snf(&m, 3).unwrap();
        assert_eq!(d, Matrix::from_rows(&[vec![1, 0], vec![0, 3]]));
        assert_eq!(u.mul(&d).mul(&v), m);
        check(&m, 3);
    }

    #[test]
    fn upper_triangular_threes() {
        let m = Matrix::from_rows(&[vec![3, 1], vec![0, 3]]);
        let (_, d, _) = plocal_snf(&m, 3).unwrap();
        assert_eq!(d, Matrix::from_rows(&[vec![1, 0], vec![0, 9]]));
    }

    #[test]
    fn zero_matrix() {
        let m = Matrix::zeros(2, 3);
        let (_, d, _) = plocal_snf(&m, 3).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn rejects_non_local() {
        let m = Matrix::from_vec(1, 1, vec![PScalar::from_frac(1, 3).unwrap()]);
        assert!(matches!(plocal_snf(&m, 3), Err(Error::InvalidScalar(..))));
    }

    #[test]
    fn rectangular() {
        let m = Matrix::from_rows(&[vec![6, 9, 12], vec![3, 27, 0]]);
        let s = check(&m, 3);
        assert_eq!(s.diag, vec![1, 1]);
    }
}

mod scalar {
    use kanlim::palgebra::scalar::*;

    #[test]
    fn valuation_of_fractions() {
        let x = PScalar::from_frac(18, 5).unwrap();
        assert_eq!(x.valuation(3), Some(2));
        assert_eq!(PScalar::from_frac(1, 9).unwrap().valuation(3), Some(-2));
        assert_eq!(PScalar::zero().valuation(3), None);
    }

    #[test]
    fn locality() {
        assert!(PScalar::from_frac(1, 2).unwrap().is_local(3));
        assert!(!PScalar::from_frac(1, 6).unwrap().is_local(3));
        assert!(PScalar::local(1, 3, 3).is_err());
    }

    #[test]
    fn reduction_mod_powers() {
        // 1/2 = 5 mod 9
        let half = PScalar::from_frac(1, 2).unwrap();
        assert_eq!(half.reduce_mod_power(3, 2), PScalar::from_int(5));
        assert_eq!(PScalar::from_int(-1).reduce_mod_power(3, 1), PScalar::from_int(2));
    }

    #[test]
    fn unit_part() {
        let x = PScalar::from_frac(6, 5).unwrap();
        assert_eq!(x.unit_part_inverse(3), PScalar::from_frac(5, 2).unwrap());
    }

    #[test]
    fn overflow_promotes_to_big() {
        let big = PScalar::from_int(1 << 59);
        let sq = &big * &big;
        assert_eq!(sq.numer(), num_bigint::BigInt::from(1u128 << 118));
        let back = sq.div(&big);
        assert_eq!(back, big);
        assert_eq!(back.to_pair(), Some((1 << 59, 1)));
    }
}

mod tensor {
    use kanlim::palgebra::tensor::*;
    use kanlim::palgebra::*;

    #[test]
    fn cyclic_pairs() {
        let a = FpModule::cyclic(3, 1);
        let b = FpModule::cyclic(3, 2);
        let (t, tor1) = tensor_and_tor(&a, &b).unwrap();
        assert_eq!(t, FpModule::cyclic(3, 1));
        assert_eq!(tor1, FpModule::cyclic(3, 1));
        assert_eq!(tensor_by_presentation(&a, &b).unwrap(), t);
        assert_eq!(tor_by_presentation(&a, &b).unwrap(), tor1);
    }

    #[test]
    fn unit_and_zero() {
        let m = FpModule::new(3, 2, vec![1, 3]);
        let (t, tor1) = tensor_and_tor(&FpModule::free(3, 1), &m).unwrap();
        assert_eq!(t, m);
        assert!(tor1.is_zero());
        assert!(tensor_modules(&FpModule::zero(3), &m).unwrap().is_zero());
        assert!(tensor_and_tor(&FpModule::zero(5), &m).is_err());
    }

    #[test]
    fn map_tensor() {
        let three = ModuleMap::scalar(&FpModule::free(3, 1), &PScalar::from_int(3)).unwrap();
        let id = ModuleMap::identity(&FpModule::cyclic(3, 2));
        let t = tensor_maps(&three, &id).unwrap();
        assert_eq!(t.source(), &FpModule::cyclic(3, 2));
        assert_eq!(t.matrix().get(0, 0).valuation(3), Some(1));
    }
}

mod module {
    use kanlim::palgebra::module::*;
    use kanlim::palgebra::*;

    #[test]
    fn canonical_form_examples() {
        let six = Matrix::from_rows(&[vec![6]]);
        assert_eq!(FpModule::canonical_form(1, &six, 3).unwrap(), FpModule::cyclic(3, 1));
        let none = Matrix::zeros(2, 0);
        assert_eq!(FpModule::canonical_form(2, &none, 3).unwrap(), FpModule::free(3, 2));
        let one = Matrix::from_rows(&[vec![1]]);
        assert_eq!(FpModule::canonical_form(1, &one, 3).unwrap(), FpModule::zero(3));
    }

    #[test]
    fn direct_sums() {
        let s = DirectSum::new(3, &[FpModule::cyclic(3, 1), FpModule::free(3, 1)]);
        assert_eq!(s.module, FpModule::new(3, 1, vec![1]));
        let e = DirectSum::new(3, &[]);
        assert!(e.module.is_zero());
        let t = DirectSum::new(3, &[FpModule::cyclic(3, 2), FpModule::cyclic(3, 1)]);
        assert_eq!(t.module.torsion(), &[1, 2]);
        assert_eq!(t.pos, vec![vec![1], vec![0]]);
    }

    #[test]
    fn display() {
        assert_eq!(FpModule::new(3, 2, vec![1, 2, 2]).to_string(), "Z/3 + (Z/9)^2 + Z_(3)^2");
        assert_eq!(FpModule::zero(3).to_string(), "0");
    }

    #[test]
    fn primes() {
        assert!(is_odd_prime(3) && is_odd_prime(5) && is_odd_prime(7));
        assert!(!is_odd_prime(2) && !is_odd_prime(9) && !is_odd_prime(1));
    }
}

mod lattice {
    use kanlim::palgebra::lattice::*;
    use kanlim::palgebra::*;

    #[test]
    fn kernel_of_row() {
        let a = Matrix::from_rows(&[vec![1, 1]]);
        let k = kernel_basis(&a, 3);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn solve_respects_locality() {
        let a = Matrix::from_rows(&[vec![3]]);
        assert!(solve(&a, &Matrix::from_rows(&[vec![1]]), 3).is_none());
        assert!(solve(&a, &Matrix::from_rows(&[vec![6]]), 3).is_some());
        // 2 is a unit
        assert!(solve(&Matrix::from_rows(&[vec![2]]), &Matrix::from_rows(&[vec![1]]), 3).is_some());
    }

    #[test]
    fn subquotient_of_multiples() {
        // 3Z / 27Z = Z/9
        let g = Matrix::from_rows(&[vec![3]]);
        let r = Matrix::from_rows(&[vec![27]]);
        let s = subquotient(&g, &r, 3);
        assert_eq!(s.module, FpModule::cyclic(3, 2));
        assert_eq!(s.classes(&Matrix::from_rows(&[vec![3]])).get(0, 0).valuation(3), Some(0));
    }

    #[test]
    fn intersection_and_preimage() {
        let a = Matrix::from_rows(&[vec![3]]);
        let b = Matrix::from_rows(&[vec![9]]);
        let i = intersect(&a, &b, 3);
        assert_eq!(i.get(0, 0).valuation(3), Some(2));
        let f = Matrix::from_rows(&[vec![3]]);
        let pre = preimage(&f, &Matrix::from_rows(&[vec![9]]), 3);
        assert_eq!(pre.get(0, 0).valuation(3), Some(1));
    }
}

mod map {
    use kanlim::palgebra::map::*;
    use kanlim::palgebra::*;
    use kanlim::Error;

    fn z(p: u64) -> FpModule {
        FpModule::free(p, 1)
    }

    #[test]
    fn three_into_z9() {
        let f = ModuleMap::new(z(3), FpModule::cyclic(3, 2), Matrix::from_rows(&[vec![3]])).unwrap();
        let s = f.subquotients();
        assert_eq!(s.kernel, z(3));
        assert_eq!(s.image, FpModule::cyclic(3, 1));
        assert_eq!(s.cokernel, FpModule::cyclic(3, 1));
        assert!(f.compose(&s.kernel_mono).unwrap().is_zero());
        assert!(s.cokernel_epi.compose(&s.image_mono).unwrap().is_zero());
        // index-3 embedding
        assert_eq!(s.kernel_mono.matrix().get(0, 0).valuation(3), Some(1));
    }

    #[test]
    fn identity_and_zero() {
        let m = FpModule::cyclic(3, 1);
        let id = ModuleMap::identity(&m);
        assert!(id.kernel().0.is_zero() && id.cokernel().0.is_zero());
        let zero = ModuleMap::zero(&z(3), &z(3));
        assert_eq!(zero.kernel().0, z(3));
        assert_eq!(zero.cokernel().0, z(3));
    }

    #[test]
    fn well_definedness() {
        let bad = ModuleMap::new(FpModule::cyclic(3, 1), z(3), Matrix::from_rows(&[vec![1]]));
        assert!(matches!(bad, Err(Error::MapNotWellDefined(_))));
        let bad = ModuleMap::new(FpModule::cyclic(3, 1), FpModule::cyclic(3, 2), Matrix::from_rows(&[vec![1]]));
        assert!(matches!(bad, Err(Error::MapNotWellDefined(_))));
        assert!(ModuleMap::new(FpModule::cyclic(3, 1), FpModule::cyclic(3, 2), Matrix::from_rows(&[vec![3]])).is_ok());
    }

    #[test]
    fn map_algebra() {
        let three = ModuleMap::scalar(&z(3), &PScalar::from_int(3)).unwrap();
        let nine = ModuleMap::scalar(&z(3), &PScalar::from_int(9)).unwrap();
        assert!(three.compose(&three).unwrap().equal(&nine).unwrap());
        assert!(three.is_mono() && !three.is_epi());
        let two = ModuleMap::scalar(&FpModule::cyclic(3, 2), &PScalar::from_int(2)).unwrap();
        assert!(two.is_iso());
        let inv = two.inverse().unwrap();
        assert!(inv.compose(&two).unwrap().equal(&ModuleMap::identity(two.source())).unwrap());
        assert!(matches!(three.compose(&two), Err(Error::CompositionError(_))));
    }

    #[test]
    fn factorizations() {
        let m = FpModule::cyclic(3, 2);
        let mono = ModuleMap::new(FpModule::cyclic(3, 1), m.clone(), Matrix::from_rows(&[vec![3]])).unwrap();
        let g = ModuleMap::new(z(3), m.clone(), Matrix::from_rows(&[vec![6]])).unwrap();
        let h = ModuleMap::lift_through_mono(&mono, &g).unwrap();
        assert!(mono.compose(&h).unwrap().equal(&g).unwrap());
        let epi = ModuleMap::new(z(3), FpModule::cyclic(3, 1), Matrix::from_rows(&[vec![1]])).unwrap();
        let g2 = ModuleMap::new(z(3), m, Matrix::from_rows(&[vec![3]])).unwrap();
        let h2 = ModuleMap::descend_through_epi(&epi, &g2).unwrap();
        assert!(h2.compose(&epi).unwrap().equal(&g2).unwrap());
    }
}

