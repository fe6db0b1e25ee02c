//! Every example must keep running against the current library.

macro_rules! examples {
    ($($name:ident => $path:literal),* $(,)?) => {
        $(
            #[allow(dead_code)]
            #[path = $path]
            mod $name;
        )*
    };
}

examples! {
    pushforward => "../examples/pushforward.rs",
    conjugacy => "../examples/conjugacy.rs",
    landen_step => "../examples/landen_step.rs",
    landen_iterate => "../examples/landen_iterate.rs",
    quadrature => "../examples/quadrature.rs",
    agm => "../examples/agm.rs",
    superconvergence => "../examples/superconvergence.rs",
    batch => "../examples/batch.rs",
}

#[test]
fn library_examples_run() {
    pushforward::run().unwrap();
    conjugacy::run().unwrap();
    landen_step::run().unwrap();
    landen_iterate::run().unwrap();
    quadrature::run().unwrap();
    agm::run().unwrap();
    superconvergence::run().unwrap();
}

#[test]
fn batch_example_reports_the_failing_job() {
    assert_eq!(batch::run(), 3);
}
