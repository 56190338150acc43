//! Contraction-free sequent calculus for intuitionistic propositional logic,
//! as an independent reference prover.

use std::collections::BTreeMap;

use copsearch_core::IFormula;

#[derive(Default)]
pub struct G4ip {
    memo: BTreeMap<(Vec<IFormula>, IFormula), bool>,
}

impl G4ip {
    pub fn provable(&mut self, hyps: &[IFormula], goal: &IFormula) -> bool {
        let mut key = hyps.to_vec();
        key.sort();
        let key = (key, goal.clone());
        if let Some(&b) = self.memo.get(&key) {
            return b;
        }
        let b = self.prove(key.0.clone(), goal);
        self.memo.insert(key, b);
        b
    }

    fn prove(&mut self, mut g: Vec<IFormula>, goal: &IFormula) -> bool {
        use IFormula::*;
        if g.contains(&Bot) || (matches!(goal, Atom(_)) && g.contains(goal)) {
            return true;
        }
        // invertible rules first
        match goal {
            And(a, b) => return self.provable(&g, a) && self.provable(&g, b),
            Imp(a, b) => {
                g.push((**a).clone());
                return self.provable(&g, b);
            }
            _ => {}
        }
        for i in 0..g.len() {
            let h = g[i].clone();
            let mut rest = g.clone();
            rest.remove(i);
            match &h {
                And(a, b) => {
                    rest.push((**a).clone());
                    rest.push((**b).clone());
                    return self.provable(&rest, goal);
                }
                Or(a, b) => {
                    let mut left = rest.clone();
                    left.push((**a).clone());
                    rest.push((**b).clone());
                    return self.provable(&left, goal) && self.provable(&rest, goal);
                }
                Imp(a, b) => match &**a {
                    Atom(_) if rest.contains(a) => {
                        rest.push((**b).clone());
                        return self.provable(&rest, goal);
                    }
                    Bot => return self.provable(&rest, goal),
                    And(c, d) => {
                        rest.push(IFormula::imp((**c).clone(), IFormula::imp((**d).clone(), (**b).clone())));
                        return self.provable(&rest, goal);
                    }
                    Or(c, d) => {
                        rest.push(IFormula::imp((**c).clone(), (**b).clone()));
                        rest.push(IFormula::imp((**d).clone(), (**b).clone()));
                        return self.provable(&rest, goal);
                    }
                    _ => {}
                },
                _ => {}
            }
        }
        // choices
        if let Or(a, b) = goal {
            if self.provable(&g, a) || self.provable(&g, b) {
                return true;
            }
        }
        for i in 0..g.len() {
            if let Imp(cd, b) = &g[i] {
                if let Imp(c, d) = &**cd {
                    let mut rest = g.clone();
                    rest.remove(i);
                    let mut left = rest.clone();
                    left.push(IFormula::imp((**d).clone(), (**b).clone()));
                    rest.push((**b).clone());
                    if self.provable(&left, &IFormula::imp((**c).clone(), (**d).clone())) && self.provable(&rest, goal) {
                        return true;
                    }
                }
            }
        }
        false
    }
}
