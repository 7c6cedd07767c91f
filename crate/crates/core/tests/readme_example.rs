//! The README's library example, kept compiling.

use canform::algorithms::{get_algorithm, AlgorithmId};
use canform::canonical::{canonicalize, equivalent};
use canform::ratpoly::rat;

#[test]
fn readme_example_runs() {
    let alpha = rat(1, 10);
    let mu = canform::Rational::from_integer(1.into());
    let nids = get_algorithm(AlgorithmId::Nids, &alpha, None, &mu).unwrap();
    let ed = get_algorithm(AlgorithmId::ExactDiffusion, &alpha, None, &mu).unwrap();
    assert!(equivalent(&nids, &ed));
    assert_eq!(canonicalize(&nids).unwrap().zeta3, rat(1, 2));
}
