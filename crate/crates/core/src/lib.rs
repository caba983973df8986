pub fn probe() -> f64 {
    use highs::{RowProblem, Sense};
    let mut pb = RowProblem::default();
    let x = pb.add_column(1.0, 0.0..10.0);
    pb.add_row(3.0.., &[(x, 1.0)]);
    let solved = pb.optimise(Sense::Minimise).solve();
    solved.get_solution().columns()[0]
}
