use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{rat, Element};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::parity::Parity;
use crate::vector_field::VectorField;

use super::{EvalStructure, SlotKind, SlotSpec, Value};

/// Deterministic configuration for the homogeneous-input sampler.
///
/// The same configuration and seed always reproduce the same sample stream;
/// each draw index gets its own ChaCha stream so samples are addressable
/// independently of evaluation order.
#[derive(Clone, Debug)]
pub struct SamplerConfig {
    /// Number of tuples a verification run evaluates.
    pub samples: usize,
    /// Upper bound on the number of monomials drawn per element (>= 1).
    pub max_monomials: u32,
    /// Upper bound on the polynomial degree of each monomial (>= 1).
    pub max_even_degree: u32,
    /// Coefficients are drawn from [-bound, bound] \ {0} (>= 1).
    pub coefficient_bound: u32,
    pub seed: u64,
    /// Per-slot parity pins; empty means every free slot is swept.
    pub parity_overrides: Vec<Option<Parity>>,
}

impl SamplerConfig {
    pub fn new(seed: u64) -> SamplerConfig {
        SamplerConfig {
            samples: 100,
            max_monomials: 2,
            max_even_degree: 2,
            coefficient_bound: 3,
            seed,
            parity_overrides: Vec::new(),
        }
    }

    pub fn with_samples(mut self, samples: usize) -> SamplerConfig {
        self.samples = samples;
        self
    }

    pub(crate) fn validate(&self) -> Result<()> {
        for (what, v) in [
            ("max_monomials", self.max_monomials),
            ("max_even_degree", self.max_even_degree),
            ("coefficient_bound", self.coefficient_bound),
        ] {
            if v < 1 {
                return Err(Error::InvalidConfig(format!("{what} must be at least 1")));
            }
        }
        Ok(())
    }
}

/// The parity each slot takes on sweep index `sweep`: pinned slots keep
/// their pin, free slots walk through all combinations as `sweep` counts up.
pub(crate) fn parity_assignment(
    slots: &[SlotSpec],
    overrides: &[Option<Parity>],
    sweep: usize,
) -> Vec<Parity> {
    let mut parities = Vec::with_capacity(slots.len());
    let mut bit = 0usize;
    for (i, slot) in slots.iter().enumerate() {
        let pinned = slot.parity.or_else(|| overrides.get(i).copied().flatten());
        let p = match pinned {
            Some(p) => p,
            None => {
                let p = Parity::from_u32(((sweep >> bit) & 1) as u32);
                bit += 1;
                p
            }
        };
        parities.push(p);
    }
    parities
}

/// Number of distinct parity assignments the sweep walks through.
pub(crate) fn parity_sweep_count(slots: &[SlotSpec], overrides: &[Option<Parity>]) -> usize {
    let free = slots
        .iter()
        .enumerate()
        .filter(|(i, s)| s.parity.is_none() && overrides.get(*i).copied().flatten().is_none())
        .count();
    1usize << free
}

/// Draws one homogeneous element of the requested parity.
pub(crate) fn sample_element(
    structure: &EvalStructure,
    parity: Parity,
    config: &SamplerConfig,
    rng: &mut ChaCha8Rng,
) -> Element {
    let sig = structure.signature();
    let ne = sig.even_count();
    let no = sig.odd_count() as u32;
    let mut acc = Element::zero(sig);
    let mut drawn: Vec<Monomial> = Vec::new();
    let n_terms = rng.gen_range(1..=config.max_monomials);
    for _ in 0..n_terms {
        // Sizes of odd subsets that realize the parity.
        let sizes: Vec<u32> = (0..=no).filter(|k| k % 2 == parity.as_u8() as u32).collect();
        if sizes.is_empty() {
            // No odd generators: the only element of odd parity is zero.
            continue;
        }
        let k = sizes[rng.gen_range(0..sizes.len())];

        let mut indices: Vec<u32> = (0..no).collect();
        for pick in 0..k as usize {
            let j = rng.gen_range(pick..indices.len());
            indices.swap(pick, j);
        }
        let mut odd: Vec<u32> = indices[..k as usize].to_vec();
        odd.sort_unstable();

        let mut even = vec![0u32; ne];
        if ne > 0 {
            let degree = rng.gen_range(0..=config.max_even_degree);
            for _ in 0..degree {
                even[rng.gen_range(0..ne)] += 1;
            }
        }

        let bound = config.coefficient_bound as i64;
        let coeff = loop {
            let c = rng.gen_range(-bound..=bound);
            if c != 0 {
                break c;
            }
        };

        // Dropping duplicate monomials keeps every stored coefficient equal
        // to a drawn one, so coefficient_bound = 1 really means {-1, 1}.
        let monomial = Monomial::from_parts(even, odd);
        if drawn.contains(&monomial) {
            continue;
        }
        drawn.push(monomial.clone());
        acc = &acc + &Element::from_monomial(sig, monomial, rat(coeff));
    }
    acc
}

fn rng_for_draw(config: &SamplerConfig, draw_index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(draw_index as u64 + 1);
    rng
}

/// Draws the input tuple for one verification step. Deterministic in
/// `(config.seed, draw_index)`; the parity assignment cycles through all
/// combinations the slots leave free.
pub fn sample_tuple(
    config: &SamplerConfig,
    slots: &[SlotSpec],
    structure: &EvalStructure,
    draw_index: usize,
) -> Result<Vec<Value>> {
    config.validate()?;
    let sweep_count = parity_sweep_count(slots, &config.parity_overrides);
    let parities = parity_assignment(slots, &config.parity_overrides, draw_index % sweep_count);
    let mut rng = rng_for_draw(config, draw_index);
    let mut values = Vec::with_capacity(slots.len());
    for (slot, &parity) in slots.iter().zip(&parities) {
        let value = match slot.kind {
            SlotKind::Element => Value::Element(sample_element(structure, parity, config, &mut rng)),
            SlotKind::VectorField => {
                let delta = structure.delta().ok_or(Error::MissingDelta)?;
                // |x . d| = |x| + |d|, so the coefficient parity compensates
                // for the derivation parity.
                let coeff_parity = parity + delta.parity();
                let coeff = sample_element(structure, coeff_parity, config, &mut rng);
                Value::VectorField(VectorField::new(coeff, delta)?)
            }
        };
        values.push(value);
    }
    Ok(values)
}
