use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};
use std::sync::Mutex;

/// Step digraph on `Z_N` where vertex `i` uses the steps of row `i mod period`.
/// Translation by `period` is an automorphism, so sources `0..period` give the
/// diameter.
pub(crate) struct StepTable {
    order: usize,
    period: usize,
    degree: usize,
    steps: [u32; 8],
}

impl StepTable {
    pub(crate) fn new(order: u32, period: usize, degree: usize, steps: &[u32]) -> Self {
        debug_assert_eq!(steps.len(), period * degree);
        debug_assert_eq!(order as usize % period, 0);
        let mut table = [0; 8];
        table[..steps.len()].copy_from_slice(steps);
        StepTable { order: order as usize, period, degree, steps: table }
    }

    /// Diameter if it is at most `limit`, otherwise `None` (also for
    /// digraphs that are not strongly connected).
    pub(crate) fn diameter_within(&self, limit: u32, scratch: &mut Scratch) -> Option<u32> {
        let mut best = 0;
        for s in 0..self.period {
            best = best.max(self.eccentricity_within(s, limit, scratch)?);
        }
        Some(best)
    }

    fn eccentricity_within(&self, source: usize, limit: u32, scratch: &mut Scratch) -> Option<u32> {
        let n = self.order;
        scratch.reset(n);
        let Scratch { dist, queue } = scratch;
        dist[source] = 0;
        queue.push(source);
        let mut head = 0;
        let mut ecc = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u];
            let row = (u % self.period) * self.degree;
            for &s in &self.steps[row..row + self.degree] {
                let mut v = u + s as usize;
                if v >= n {
                    v -= n;
                }
                if dist[v] == u32::MAX {
                    if du + 1 > limit {
                        return None;
                    }
                    dist[v] = du + 1;
                    ecc = du + 1;
                    queue.push(v);
                }
            }
        }
        (queue.len() == n).then_some(ecc)
    }
}

#[derive(Default)]
pub(crate) struct Scratch {
    dist: Vec<u32>,
    queue: Vec<usize>,
}

impl Scratch {
    fn reset(&mut self, n: usize) {
        self.dist.clear();
        self.dist.resize(n, u32::MAX);
        self.queue.clear();
    }
}

/// Best-so-far state for one worker: the smallest diameter seen and every
/// candidate that attains it.
pub(crate) struct Tally {
    pub best: u32,
    pub witnesses: Vec<[u32; 8]>,
    pub examined: u64,
}

impl Tally {
    fn new() -> Self {
        Tally { best: u32::MAX, witnesses: Vec::new(), examined: 0 }
    }
}

/// Evaluates candidates produced by `fill(work_item, emit)` over
/// `0..work_items` on `workers` threads. Work items are claimed through an
/// atomic counter; the shared bound only prunes candidates that are strictly
/// worse than some already-found diameter, so the merged tally is the same
/// for any worker count.
pub(crate) fn run<F>(work_items: usize, workers: usize, fill: F) -> Tally
where
    F: Fn(usize, &mut dyn FnMut([u32; 8], &StepTable)) + Sync,
{
    let next = AtomicUsize::new(0);
    let bound = AtomicU32::new(u32::MAX);
    let results = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..workers.max(1) {
            scope.spawn(|| {
                let mut tally = Tally::new();
                let mut scratch = Scratch::default();
                loop {
                    let item = next.fetch_add(1, Ordering::Relaxed);
                    if item >= work_items {
                        break;
                    }
                    fill(item, &mut |key, table| {
                        tally.examined += 1;
                        let limit = bound.load(Ordering::Relaxed).min(tally.best);
                        if let Some(d) = table.diameter_within(limit, &mut scratch) {
                            if d < tally.best {
                                tally.best = d;
                                tally.witnesses.clear();
                                bound.fetch_min(d, Ordering::Relaxed);
                            }
                            tally.witnesses.push(key);
                        }
                    });
                }
                results.lock().expect("no worker panics while holding the lock").push(tally);
            });
        }
    });
    merge(results.into_inner().expect("workers finished"))
}

fn merge(tallies: Vec<Tally>) -> Tally {
    let examined = tallies.iter().map(|t| t.examined).sum();
    let best = tallies.iter().map(|t| t.best).min().unwrap_or(u32::MAX);
    let mut witnesses: Vec<[u32; 8]> =
        tallies.into_iter().filter(|t| t.best == best).flat_map(|t| t.witnesses).collect();
    witnesses.sort_unstable();
    Tally { best, witnesses, examined }
}
