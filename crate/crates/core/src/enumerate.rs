//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! Removing a minimal generator larger than the Frobenius number from a
//! semigroup of genus g yields one of genus g + 1, and every semigroup
//! of genus g + 1 arises exactly once this way (its parent is the
//! semigroup with the largest gap filled back in). Walking this tree
//! from the unique genus-1 semigroup enumerates everything without
//! duplicates.

use crate::semigroup::NumericalSemigroup;

/// The children of `s` in the genus tree: one per minimal generator
/// exceeding the Frobenius number.
pub fn genus_tree_children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    s.minimal_generators()
        .iter()
        .filter(|&&g| g > s.frobenius())
        .map(|&g| remove_generator(s, g))
        .collect()
}

fn remove_generator(s: &NumericalSemigroup, gen: i64) -> NumericalSemigroup {
    let mut table = vec![true; (gen + 2) as usize];
    for x in 0..=s.frobenius() + 1 {
        table[x as usize] = s.contains(x);
    }
    table[gen as usize] = false;
    NumericalSemigroup::from_membership_table(table)
}

/// All numerical semigroups of genus 1 through `max_genus`, one level
/// per genus, each level sorted by gap sequence.
pub fn enumerate_by_genus(max_genus: i64) -> Vec<Vec<NumericalSemigroup>> {
    let mut levels: Vec<Vec<NumericalSemigroup>> = Vec::new();
    if max_genus < 1 {
        return levels;
    }
    levels.push(vec![
        NumericalSemigroup::from_generators(&[2, 3]).expect("the genus-1 semigroup")
    ]);
    for _ in 1..max_genus {
        let mut next: Vec<NumericalSemigroup> = levels
            .last()
            .unwrap()
            .iter()
            .flat_map(genus_tree_children)
            .collect();
        next.sort_by(|a, b| a.gaps().cmp(b.gaps()));
        levels.push(next);
    }
    levels
}
