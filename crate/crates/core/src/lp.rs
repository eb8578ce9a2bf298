//! Exact rational linear programming.
//!
//! A two-phase dense tableau simplex with Bland's rule. Every outcome carries
//! a certificate that can be checked with exact arithmetic: an optimal point,
//! a Farkas vector proving infeasibility, or an improving ray.
//!
//! Infeasibility certificates refer to the *canonical* form of the program:
//! every constraint is read as `ã·x ≥ b̃` (`≤` rows are negated, `=` rows keep
//! their orientation) and every finite lower bound as `x_j ≥ l_j`. A
//! certificate `(y, z)` has `y_r ≥ 0` on inequality rows, `z_j ≥ 0`,
//! `Σ y_r ã_r + Σ z_j e_j = 0` and `Σ y_r b̃_r + Σ z_j l_j = 1`.

use crate::error::{invalid, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        let lhs = dot(&self.coefficients, point);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }

    /// Orientation of the row in canonical `≥` form.
    fn orientation(&self) -> Rational {
        match self.relation {
            Relation::Le => -Rational::one(),
            Relation::Eq | Relation::Ge => Rational::one(),
        }
    }
}

/// `maximize objective·x` subject to linear constraints and per-variable
/// lower bounds. Variables default to `x_j ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    variable_count: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
    lower_bounds: Vec<Option<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible(FarkasCertificate),
    /// `point` is feasible and `point + t·ray` stays feasible for all `t ≥ 0`
    /// while the objective grows without bound.
    Unbounded { point: Vec<Rational>, ray: Vec<Rational> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

/// Farkas multipliers, see the module docs for the sign conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub constraint_multipliers: Vec<Rational>,
    pub bound_multipliers: Vec<Rational>,
}

impl FarkasCertificate {
    /// `(Σ y_r ã_r + Σ z_j e_j, Σ y_r b̃_r + Σ z_j l_j)`.
    pub fn combination(&self, lp: &LinearProgram) -> (Vec<Rational>, Rational) {
        let mut row = vec![Rational::zero(); lp.variable_count];
        let mut rhs = Rational::zero();
        for (y, c) in self.constraint_multipliers.iter().zip(&lp.constraints) {
            if y.is_zero() {
                continue;
            }
            let scale = y * c.orientation();
            for (acc, a) in row.iter_mut().zip(&c.coefficients) {
                *acc += &scale * a;
            }
            rhs += &scale * &c.rhs;
        }
        for (j, z) in self.bound_multipliers.iter().enumerate() {
            if z.is_zero() {
                continue;
            }
            row[j] += z;
            if let Some(l) = &lp.lower_bounds[j] {
                rhs += z * l;
            }
        }
        (row, rhs)
    }

    /// Exact check of the certificate against `lp`.
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        if self.constraint_multipliers.len() != lp.constraints.len()
            || self.bound_multipliers.len() != lp.variable_count
        {
            return false;
        }
        let signs_ok = self
            .constraint_multipliers
            .iter()
            .zip(&lp.constraints)
            .all(|(y, c)| c.relation == Relation::Eq || !y.is_negative());
        let bounds_ok = self
            .bound_multipliers
            .iter()
            .zip(&lp.lower_bounds)
            .all(|(z, l)| match l {
                Some(_) => !z.is_negative(),
                None => z.is_zero(),
            });
        if !signs_ok || !bounds_ok {
            return false;
        }
        let (row, rhs) = self.combination(lp);
        row.iter().all(Rational::is_zero) && rhs.is_positive()
    }
}

impl LinearProgram {
    /// A program over `variable_count` nonnegative variables with zero objective.
    pub fn new(variable_count: usize) -> Self {
        LinearProgram {
            variable_count,
            objective: vec![Rational::zero(); variable_count],
            constraints: Vec::new(),
            lower_bounds: vec![Some(Rational::zero()); variable_count],
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn lower_bounds(&self) -> &[Option<Rational>] {
        &self.lower_bounds
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) -> &mut Self {
        self.objective = objective;
        self
    }

    /// Adds a dense constraint and returns its row index.
    pub fn add_constraint(&mut self, coefficients: Vec<Rational>, relation: Relation, rhs: Rational) -> usize {
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
        self.constraints.len() - 1
    }

    /// Adds a constraint given as `(variable, coefficient)` pairs; repeated
    /// variables accumulate.
    pub fn add_sparse_constraint(&mut self, terms: &[(usize, Rational)], relation: Relation, rhs: Rational) -> usize {
        let mut coefficients = vec![Rational::zero(); self.variable_count];
        for (j, a) in terms {
            coefficients[*j] += a;
        }
        self.add_constraint(coefficients, relation, rhs)
    }

    /// `None` makes the variable free.
    pub fn set_lower_bound(&mut self, variable: usize, bound: Option<Rational>) -> &mut Self {
        self.lower_bounds[variable] = bound;
        self
    }

    pub fn is_feasible_point(&self, point: &[Rational]) -> bool {
        point.len() == self.variable_count
            && self
                .lower_bounds
                .iter()
                .zip(point)
                .all(|(l, x)| l.as_ref().is_none_or(|l| x >= l))
            && self.constraints.iter().all(|c| c.is_satisfied_by(point))
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        dot(&self.objective, point)
    }

    fn validate(&self) -> Result<()> {
        if self.variable_count == 0 {
            return invalid("linear program without variables");
        }
        if self.objective.len() != self.variable_count {
            return invalid(format!(
                "objective has {} coefficients, expected {}",
                self.objective.len(),
                self.variable_count
            ));
        }
        if self.lower_bounds.len() != self.variable_count {
            return invalid("lower bound list has the wrong length");
        }
        if let Some(r) = self
            .constraints
            .iter()
            .position(|c| c.coefficients.len() != self.variable_count)
        {
            return invalid(format!(
                "constraint {r} has {} coefficients, expected {}",
                self.constraints[r].coefficients.len(),
                self.variable_count
            ));
        }
        Ok(())
    }

    pub fn solve(&self) -> Result<LpOutcome> {
        self.validate()?;
        let mut tableau = Tableau::build(self);
        if let Some(cert) = tableau.phase_one(self) {
            return Ok(LpOutcome::Infeasible(cert));
        }
        Ok(tableau.phase_two(self))
    }

    /// Ignores the objective: returns some point satisfying every constraint,
    /// or a Farkas certificate.
    pub fn feasible_point(&self) -> Result<Feasibility> {
        self.validate()?;
        let mut tableau = Tableau::build(self);
        match tableau.phase_one(self) {
            Some(cert) => Ok(Feasibility::Infeasible(cert)),
            None => Ok(Feasibility::Feasible(tableau.original_point(self))),
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// How an original variable maps onto standard-form columns.
#[derive(Debug, Clone, Copy)]
enum VarMap {
    /// `x = l + x'`.
    Shifted(usize),
    /// `x = x⁺ - x⁻`.
    Split(usize, usize),
}

struct Tableau {
    /// `rows[r]` holds the column entries followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs followed by minus the objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    var_map: Vec<VarMap>,
    /// Columns `[first_artificial, width)` are artificial.
    first_artificial: usize,
    width: usize,
    /// Column that formed the identity in row `r` of the starting basis.
    initial_identity: Vec<usize>,
    /// `-1` where the row was negated to make its right-hand side nonnegative.
    row_sign: Vec<bool>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let mut var_map = Vec::with_capacity(lp.variable_count);
        let mut structural = 0;
        for bound in &lp.lower_bounds {
            match bound {
                Some(_) => {
                    var_map.push(VarMap::Shifted(structural));
                    structural += 1;
                }
                None => {
                    var_map.push(VarMap::Split(structural, structural + 1));
                    structural += 2;
                }
            }
        }
        let m = lp.constraints.len();
        let slack_rows: Vec<usize> = (0..m)
            .filter(|&r| lp.constraints[r].relation != Relation::Eq)
            .collect();
        let mut slack_col = vec![None; m];
        for (k, &r) in slack_rows.iter().enumerate() {
            slack_col[r] = Some(structural + k);
        }
        let first_slack_free = structural + slack_rows.len();

        // Shifted right-hand sides and row signs.
        let mut rhs = Vec::with_capacity(m);
        let mut negate = Vec::with_capacity(m);
        for c in &lp.constraints {
            let mut b = c.rhs.clone();
            for (a, l) in c.coefficients.iter().zip(&lp.lower_bounds) {
                if let Some(l) = l {
                    if !a.is_zero() && !l.is_zero() {
                        b -= a * l;
                    }
                }
            }
            // Zero-rhs `≥` rows are flipped too so their slack can start basic.
            negate.push(b.is_negative() || (b.is_zero() && c.relation == Relation::Ge));
            rhs.push(b);
        }

        // Rows whose slack enters with +1 after sign adjustment start with the slack basic.
        let mut needs_artificial = Vec::with_capacity(m);
        for r in 0..m {
            let slack_sign_positive = match lp.constraints[r].relation {
                Relation::Le => !negate[r],
                Relation::Ge => negate[r],
                Relation::Eq => false,
            };
            needs_artificial.push(!slack_sign_positive);
        }
        let artificial_count = needs_artificial.iter().filter(|&&a| a).count();
        let width = first_slack_free + artificial_count;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut initial_identity = Vec::with_capacity(m);
        let mut next_artificial = first_slack_free;
        for (r, c) in lp.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); width + 1];
            for (j, a) in c.coefficients.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                match var_map[j] {
                    VarMap::Shifted(col) => row[col] = a.clone(),
                    VarMap::Split(p, n) => {
                        row[p] = a.clone();
                        row[n] = -a;
                    }
                }
            }
            if let Some(col) = slack_col[r] {
                row[col] = match c.relation {
                    Relation::Le => Rational::one(),
                    _ => -Rational::one(),
                };
            }
            row[width] = rhs[r].clone();
            if negate[r] {
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x = -&*x;
                    }
                }
            }
            if needs_artificial[r] {
                row[next_artificial] = Rational::one();
                basis.push(next_artificial);
                initial_identity.push(next_artificial);
                next_artificial += 1;
            } else {
                let col = slack_col[r].expect("slack basis row has a slack");
                basis.push(col);
                initial_identity.push(col);
            }
            rows.push(row);
        }

        Tableau {
            rows,
            cost: vec![Rational::zero(); width + 1],
            basis,
            var_map,
            first_artificial: first_slack_free,
            width,
            initial_identity,
            row_sign: negate,
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let mut pivot_row = std::mem::take(&mut self.rows[row]);
        let piv = pivot_row[col].clone();
        if !piv.is_one() {
            let inv = piv.recip();
            for x in pivot_row.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let nonzero: Vec<usize> = (0..=self.width)
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        let eliminate = |target: &mut Vec<Rational>| {
            let factor = target[col].clone();
            if factor.is_zero() {
                return;
            }
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                target[j] -= delta;
            }
        };
        for (r, target) in self.rows.iter_mut().enumerate() {
            if r != row {
                eliminate(target);
            }
        }
        eliminate(&mut self.cost);
        self.rows[row] = pivot_row;
        self.basis[row] = col;
    }

    /// Runs the simplex loop on the current cost row, never letting columns
    /// at or beyond `column_limit` enter. Returns the entering column of an
    /// unbounded direction, if one is found.
    fn iterate(&mut self, column_limit: usize) -> Option<usize> {
        loop {
            // Bland: lowest-index column with negative reduced cost.
            let Some(col) = (0..column_limit).find(|&j| self.cost[j].is_negative()) else {
                return None;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                let a = &row[col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / a;
                let better = match &best {
                    None => true,
                    Some((br, bratio)) => {
                        ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                None => return Some(col),
                Some((r, _)) => self.pivot(r, col),
            }
        }
    }

    /// Minimizes the sum of artificials. Returns a Farkas certificate when
    /// the minimum is positive.
    fn phase_one(&mut self, lp: &LinearProgram) -> Option<FarkasCertificate> {
        if self.first_artificial == self.width {
            return None;
        }
        for j in self.first_artificial..self.width {
            self.cost[j] = Rational::one();
        }
        for r in 0..self.rows.len() {
            if self.basis[r] >= self.first_artificial {
                let row = &self.rows[r];
                for (c, x) in self.cost.iter_mut().zip(row) {
                    if !x.is_zero() {
                        *c -= x;
                    }
                }
            }
        }
        let unbounded = self.iterate(self.width);
        debug_assert!(unbounded.is_none(), "phase one is bounded below by zero");
        let infeasibility = -&self.cost[self.width];
        if infeasibility.is_positive() {
            return Some(self.farkas(lp, &infeasibility));
        }
        self.drive_out_artificials();
        None
    }

    fn farkas(&self, lp: &LinearProgram, infeasibility: &Rational) -> FarkasCertificate {
        // Simplex multipliers of the phase-one optimum, mapped back to the
        // unsigned rows: w_r = ±(c_id - d_id).
        let w: Vec<Rational> = (0..self.rows.len())
            .map(|r| {
                let id = self.initial_identity[r];
                let c_id = if id >= self.first_artificial {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                let pi = c_id - &self.cost[id];
                if self.row_sign[r] {
                    -pi
                } else {
                    pi
                }
            })
            .collect();
        let scale = infeasibility.recip();
        let constraint_multipliers: Vec<Rational> = w
            .iter()
            .zip(&lp.constraints)
            .map(|(w, c)| match c.relation {
                Relation::Le => -w * &scale,
                _ => w * &scale,
            })
            .collect();
        let mut bound_multipliers = vec![Rational::zero(); lp.variable_count];
        for (j, bound) in lp.lower_bounds.iter().enumerate() {
            if bound.is_some() {
                let v: Rational = w
                    .iter()
                    .zip(&lp.constraints)
                    .filter(|(w, c)| !w.is_zero() && !c.coefficients[j].is_zero())
                    .map(|(w, c)| w * &c.coefficients[j])
                    .sum();
                bound_multipliers[j] = -v * &scale;
            }
        }
        let cert = FarkasCertificate {
            constraint_multipliers,
            bound_multipliers,
        };
        debug_assert!(cert.verify(lp), "phase one produced an invalid Farkas certificate");
        cert
    }

    /// Pivots zero-level artificials out of the basis where possible; rows
    /// where that is impossible are redundant and stay inert.
    fn drive_out_artificials(&mut self) {
        for r in 0..self.rows.len() {
            if self.basis[r] < self.first_artificial {
                continue;
            }
            if let Some(col) = (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero()) {
                self.pivot(r, col);
            }
        }
    }

    fn phase_two(&mut self, lp: &LinearProgram) -> LpOutcome {
        // Minimize -c·x over the standard-form columns.
        let mut cost = vec![Rational::zero(); self.width + 1];
        for (j, map) in self.var_map.iter().enumerate() {
            let c = &lp.objective[j];
            if c.is_zero() {
                continue;
            }
            match *map {
                VarMap::Shifted(col) => cost[col] = -c,
                VarMap::Split(p, n) => {
                    cost[p] = -c;
                    cost[n] = c.clone();
                }
            }
        }
        for r in 0..self.rows.len() {
            let cb = cost[self.basis[r]].clone();
            if cb.is_zero() {
                continue;
            }
            for (c, x) in cost.iter_mut().zip(&self.rows[r]) {
                if !x.is_zero() {
                    *c -= &cb * x;
                }
            }
        }
        self.cost = cost;
        match self.iterate(self.first_artificial) {
            None => {
                let point = self.original_point(lp);
                let value = lp.objective_value(&point);
                LpOutcome::Optimal { value, point }
            }
            Some(col) => {
                let point = self.original_point(lp);
                let mut direction = vec![Rational::zero(); self.width];
                direction[col] = Rational::one();
                for (r, row) in self.rows.iter().enumerate() {
                    if !row[col].is_zero() {
                        direction[self.basis[r]] = -&row[col];
                    }
                }
                let ray = self.map_back(&direction, None);
                LpOutcome::Unbounded { point, ray }
            }
        }
    }

    fn original_point(&self, lp: &LinearProgram) -> Vec<Rational> {
        let mut values = vec![Rational::zero(); self.width];
        for (r, &b) in self.basis.iter().enumerate() {
            values[b] = self.rows[r][self.width].clone();
        }
        self.map_back(&values, Some(&lp.lower_bounds))
    }

    fn map_back(&self, columns: &[Rational], shift: Option<&[Option<Rational>]>) -> Vec<Rational> {
        self.var_map
            .iter()
            .enumerate()
            .map(|(j, map)| match *map {
                VarMap::Shifted(col) => {
                    let base = shift
                        .and_then(|s| s[j].clone())
                        .unwrap_or_else(Rational::zero);
                    base + &columns[col]
                }
                VarMap::Split(p, n) => &columns[p] - &columns[n],
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn simple_maximum() {
        let mut lp = LinearProgram::new(1);
        lp.set_objective(vec![r(1)]);
        lp.add_constraint(vec![r(1)], Relation::Le, r(3));
        assert_eq!(
            lp.solve().unwrap(),
            LpOutcome::Optimal {
                value: r(3),
                point: vec![r(3)]
            }
        );
    }

    #[test]
    fn infeasible_with_free_variable() {
        let mut lp = LinearProgram::new(1);
        lp.set_lower_bound(0, None);
        lp.add_constraint(vec![r(1)], Relation::Ge, r(1));
        lp.add_constraint(vec![r(-1)], Relation::Ge, r(0));
        match lp.solve().unwrap() {
            LpOutcome::Infeasible(cert) => {
                assert!(cert.verify(&lp));
                assert_eq!(cert.constraint_multipliers, vec![r(1), r(1)]);
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_ray() {
        let mut lp = LinearProgram::new(1);
        lp.set_objective(vec![r(1)]);
        lp.add_constraint(vec![r(1)], Relation::Ge, r(0));
        match lp.solve().unwrap() {
            LpOutcome::Unbounded { point, ray } => {
                assert!(lp.is_feasible_point(&point));
                assert!(lp.objective_value(&ray).is_positive());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn feasible_point_in_interval() {
        let mut lp = LinearProgram::new(1);
        lp.set_lower_bound(0, None);
        lp.add_constraint(vec![r(1)], Relation::Ge, r(1));
        lp.add_constraint(vec![r(1)], Relation::Le, r(2));
        match lp.feasible_point().unwrap() {
            Feasibility::Feasible(x) => assert!(x[0] >= r(1) && x[0] <= r(2)),
            Feasibility::Infeasible(_) => panic!("feasible system reported infeasible"),
        }
    }

    #[test]
    fn bounds_and_equalities() {
        // maximize x + 2y, x + y = 4, x >= 1, y <= 5/2, y >= -3 (bound)
        let mut lp = LinearProgram::new(2);
        lp.set_objective(vec![r(1), r(2)]);
        lp.set_lower_bound(0, Some(r(1)));
        lp.set_lower_bound(1, Some(r(-3)));
        lp.add_constraint(vec![r(1), r(1)], Relation::Eq, r(4));
        lp.add_constraint(vec![r(0), r(1)], Relation::Le, q(5, 2));
        assert_eq!(
            lp.solve().unwrap(),
            LpOutcome::Optimal {
                value: q(13, 2),
                point: vec![q(3, 2), q(5, 2)]
            }
        );
    }

    #[test]
    fn infeasible_through_bounds() {
        // x >= 2 as a bound, x <= 1 as a row
        let mut lp = LinearProgram::new(1);
        lp.set_lower_bound(0, Some(r(2)));
        lp.add_constraint(vec![r(1)], Relation::Le, r(1));
        match lp.solve().unwrap() {
            LpOutcome::Infeasible(cert) => {
                assert!(cert.verify(&lp));
                assert_eq!(cert.bound_multipliers, vec![r(1)]);
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(vec![r(1), r(0)]);
        lp.add_constraint(vec![r(1), r(1)], Relation::Eq, r(1));
        lp.add_constraint(vec![r(2), r(2)], Relation::Eq, r(2));
        assert_eq!(
            lp.solve().unwrap(),
            LpOutcome::Optimal {
                value: r(1),
                point: vec![r(1), r(0)]
            }
        );
    }

    #[test]
    fn malformed_programs_are_rejected() {
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![r(1)], Relation::Le, r(1));
        assert!(lp.solve().is_err());
        assert!(LinearProgram::new(0).solve().is_err());
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook largest-coefficient rule.
        let mut lp = LinearProgram::new(4);
        lp.set_objective(vec![q(3, 4), r(-150), q(1, 50), r(-6)]);
        lp.add_constraint(vec![q(1, 4), r(-60), q(-1, 25), r(9)], Relation::Le, r(0));
        lp.add_constraint(vec![q(1, 2), r(-90), q(-1, 50), r(3)], Relation::Le, r(0));
        lp.add_constraint(vec![r(0), r(0), r(1), r(0)], Relation::Le, r(1));
        match lp.solve().unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(1, 20));
                assert!(lp.is_feasible_point(&point));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
