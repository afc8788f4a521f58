//! Deterministic input generators.
//!
//! Symbols start at `b'a'`: an alphabet of size `s` is
//! `a, b, c, …` wrapping around modulo 256, so `s = 256` covers every byte.
//! Random texts use ChaCha8 seeded through `SeedableRng::seed_from_u64`.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::text::Text;

/// Default cap on generated text length: 1 GiB.
pub const DEFAULT_SIZE_CAP: usize = 1 << 30;

/// Default cap on the number of texts [`enumerate_all`] may yield.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `F(1) = "b"`, `F(2) = "a"`, `F(k) = F(k-1) F(k-2)`.
    Fibonacci { order: u32 },
    /// `T(0) = "a"`, `T(k+1) = T(k) complement(T(k))`.
    ThueMorse { order: u32 },
    Random { len: usize, sigma: usize, seed: u64 },
    /// `len` symbols of the word cycling through the first `period` letters.
    Periodic { len: usize, period: usize },
    Literal(Vec<u8>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub size_cap: usize,
}

impl GenSpec {
    pub fn new(family: Family) -> Self {
        GenSpec { family, size_cap: DEFAULT_SIZE_CAP }
    }

    pub fn generate(&self) -> Result<Text> {
        match &self.family {
            Family::Fibonacci { order } => fibonacci(*order, self.size_cap),
            Family::ThueMorse { order } => thue_morse(*order, self.size_cap),
            Family::Random { len, sigma, seed } => {
                check_len(*len as u128, self.size_cap)?;
                gen_random(*len, *sigma, *seed)
            }
            Family::Periodic { len, period } => {
                check_len(*len as u128, self.size_cap)?;
                if *period == 0 || *period > 256 {
                    return Err(Error::InvalidParameter("period must be in 1..=256"));
                }
                Ok(Text::new((0..*len).map(|x| symbol(x % period)).collect::<Vec<u8>>()))
            }
            Family::Literal(bytes) => {
                check_len(bytes.len() as u128, self.size_cap)?;
                Ok(Text::from(bytes.as_slice()))
            }
        }
    }
}

#[inline]
fn symbol(k: usize) -> u8 {
    b'a'.wrapping_add(k as u8)
}

fn check_len(requested: u128, cap: usize) -> Result<()> {
    if requested > cap as u128 {
        return Err(Error::GeneratorTooLarge { requested, cap });
    }
    Ok(())
}

/// The Fibonacci word of the given order (`order ≥ 1`), capped at
/// [`DEFAULT_SIZE_CAP`].
pub fn gen_fibonacci(order: u32) -> Result<Text> {
    fibonacci(order, DEFAULT_SIZE_CAP)
}

fn fibonacci(order: u32, cap: usize) -> Result<Text> {
    if order == 0 {
        return Err(Error::InvalidParameter("Fibonacci order must be at least 1"));
    }
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 2..order {
        (a, b) = (b, a + b);
        if b > cap as u128 {
            return Err(Error::GeneratorTooLarge { requested: b, cap });
        }
    }
    if order == 1 {
        return Ok(Text::from("b"));
    }
    // F(k) is a prefix of F(k+1), so one buffer is extended in place by
    // appending its own prefix of length |F(k-1)|.
    let mut word = vec![b'a'];
    let mut prev_len = 1usize;
    for _ in 2..order {
        let len = word.len();
        if prev_len == len {
            // F(3) = F(2) F(1) = "a" "b".
            word.push(b'b');
        } else {
            word.extend_from_within(..prev_len);
        }
        prev_len = len;
    }
    Ok(Text::new(word))
}

/// The Thue–Morse word of length `2^order`, capped at [`DEFAULT_SIZE_CAP`].
pub fn gen_thue_morse(order: u32) -> Result<Text> {
    thue_morse(order, DEFAULT_SIZE_CAP)
}

fn thue_morse(order: u32, cap: usize) -> Result<Text> {
    let len = 1u128.checked_shl(order).filter(|_| order < 127).unwrap_or(u128::MAX);
    check_len(len, cap)?;
    let mut word = Vec::with_capacity(len as usize);
    word.push(b'a');
    for _ in 0..order {
        let half = word.len();
        for x in 0..half {
            word.push(if word[x] == b'a' { b'b' } else { b'a' });
        }
    }
    Ok(Text::new(word))
}

/// `len` symbols drawn uniformly from an alphabet of size `sigma`
/// (`1 ≤ sigma ≤ 256`).
pub fn gen_random(len: usize, sigma: usize, seed: u64) -> Result<Text> {
    if sigma == 0 || sigma > 256 {
        return Err(Error::InvalidParameter("sigma must be in 1..=256"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Text::new((0..len).map(|_| symbol(rng.gen_range(0..sigma))).collect::<Vec<u8>>()))
}

/// Every text of length `len` over an alphabet of size `sigma`, in
/// lexicographic order.
pub fn enumerate_all(sigma: usize, len: usize) -> Result<AllTexts> {
    enumerate_all_capped(sigma, len, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_all_capped(sigma: usize, len: usize, cap: usize) -> Result<AllTexts> {
    if sigma == 0 || sigma > 256 {
        return Err(Error::InvalidParameter("sigma must be in 1..=256"));
    }
    let count = (sigma as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::GeneratorTooLarge { requested: count, cap });
    }
    Ok(AllTexts { sigma, digits: vec![0; len], remaining: count as usize })
}

/// Iterator returned by [`enumerate_all`]: an odometer over digit vectors.
#[derive(Debug, Clone)]
pub struct AllTexts {
    sigma: usize,
    digits: Vec<usize>,
    remaining: usize,
}

impl Iterator for AllTexts {
    type Item = Text;

    fn next(&mut self) -> Option<Text> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let text = Text::new(self.digits.iter().map(|&d| symbol(d)).collect::<Vec<u8>>());
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.sigma {
                break;
            }
            *d = 0;
        }
        Some(text)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for AllTexts {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    fn s(t: Text) -> String {
        String::from_utf8(t.into_bytes()).unwrap()
    }

    #[test]
    fn fibonacci_words() {
        assert_eq!(s(gen_fibonacci(1).unwrap()), "b");
        assert_eq!(s(gen_fibonacci(2).unwrap()), "a");
        assert_eq!(s(gen_fibonacci(3).unwrap()), "ab");
        assert_eq!(s(gen_fibonacci(5).unwrap()), "abaab");
        assert_eq!(s(gen_fibonacci(6).unwrap()), "abaababa");
        assert_eq!(gen_fibonacci(10).unwrap().len(), 55);
        assert!(gen_fibonacci(0).is_err());
        assert!(matches!(gen_fibonacci(200), Err(Error::GeneratorTooLarge { .. })));
    }

    #[test]
    fn fibonacci_recurrence() {
        for k in 3..20 {
            let expect = [gen_fibonacci(k - 1).unwrap().into_bytes(), gen_fibonacci(k - 2).unwrap().into_bytes()].concat();
            assert_eq!(gen_fibonacci(k).unwrap().into_bytes(), expect, "order {k}");
        }
    }

    #[test]
    fn thue_morse_words() {
        assert_eq!(s(gen_thue_morse(0).unwrap()), "a");
        assert_eq!(s(gen_thue_morse(2).unwrap()), "abba");
        assert_eq!(s(gen_thue_morse(3).unwrap()), "abbabaab");
        assert_eq!(gen_thue_morse(20).unwrap().len(), 1 << 20);
        assert!(gen_thue_morse(40).is_err());
    }

    #[test]
    fn random_texts() {
        assert!(gen_random(0, 4, 1).unwrap().is_empty());
        assert_eq!(gen_random(100, 26, 7).unwrap(), gen_random(100, 26, 7).unwrap());
        assert_ne!(gen_random(100, 26, 7).unwrap(), gen_random(100, 26, 8).unwrap());
        assert_eq!(gen_random(256, 1, 3).unwrap().into_bytes(), vec![b'a'; 256]);
        assert!(gen_random(10, 4, 0).unwrap().as_bytes().iter().all(|b| (b'a'..=b'd').contains(b)));
        assert!(gen_random(1, 0, 0).is_err());
        assert!(gen_random(1, 257, 0).is_err());
        let all = gen_random(4096, 256, 9).unwrap();
        assert!(all.as_bytes().contains(&0));
    }

    #[test]
    fn enumeration() {
        let texts: Vec<String> = enumerate_all(2, 2).unwrap().map(s).collect();
        assert_eq!(texts, ["aa", "ab", "ba", "bb"]);
        assert_eq!(enumerate_all(2, 16).unwrap().count(), 65536);
        let texts: Vec<String> = enumerate_all(3, 1).unwrap().map(s).collect();
        assert_eq!(texts, ["a", "b", "c"]);
        assert_eq!(enumerate_all(5, 0).unwrap().map(s).collect::<Vec<_>>(), [""]);
        assert!(enumerate_all_capped(2, 10, 1000).is_err());
    }

    #[test]
    fn spec_families() {
        let p = GenSpec::new(Family::Periodic { len: 7, period: 3 }).generate().unwrap();
        assert_eq!(s(p), "abcabca");
        let lit = GenSpec::new(Family::Literal(b"xyz".to_vec())).generate().unwrap();
        assert_eq!(s(lit), "xyz");
        let capped = GenSpec { family: Family::Random { len: 10, sigma: 2, seed: 0 }, size_cap: 5 };
        assert_eq!(capped.generate(), Err(Error::GeneratorTooLarge { requested: 10, cap: 5 }));
        let fib = GenSpec { family: Family::Fibonacci { order: 10 }, size_cap: 54 };
        assert!(fib.generate().is_err());
    }
}
