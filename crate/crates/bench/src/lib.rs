//! Named Steiner workloads shared by the criterion benches and the
//! `steiner bench` command.

use std::time::{Duration, Instant};

use steiner_core::eccentricity::{steiner_profile, Budget};
use steiner_core::families::{build_gk, build_h};
use steiner_core::steiner::steiner_distance;
use steiner_core::{Graph, TerminalSet};

pub enum Workload {
    /// One Steiner tree with traceback.
    Distance(TerminalSet),
    /// A full k-profile.
    Profile(usize),
}

pub struct BenchCase {
    pub name: String,
    pub graph: Graph,
    pub workload: Workload,
}

impl BenchCase {
    /// Runs the workload once and returns its headline number: the tree
    /// cost, or sdiam for profiles.
    pub fn run(&self) -> u32 {
        match &self.workload {
            Workload::Distance(s) => steiner_distance(&self.graph, s)
                .expect("bench terminals are valid")
                .cost
                .finite()
                .expect("connected"),
            Workload::Profile(k) => steiner_profile(&self.graph, *k, Budget::unlimited())
                .expect("bench profiles are valid")
                .sdiam()
                .finite()
                .expect("connected"),
        }
    }
}

fn set(vs: Vec<usize>) -> TerminalSet {
    TerminalSet::new(vs).expect("nonempty")
}

pub fn cases() -> Vec<BenchCase> {
    let mut out = Vec::new();
    for k in 5..=8 {
        let h = build_gk(k).expect("k >= 5");
        let ds: Vec<usize> = (1..=k).map(|i| h.role(&format!("d{i}"))).collect();
        out.push(BenchCase {
            name: format!("gk{k}_dist_D"),
            graph: h.graph.clone(),
            workload: Workload::Distance(set(ds)),
        });
    }
    let g5 = build_gk(5).expect("k >= 5");
    out.push(BenchCase {
        name: "gk5_profile".into(),
        graph: g5.graph,
        workload: Workload::Profile(5),
    });
    let h = build_h();
    out.push(BenchCase {
        name: "h_dist_D".into(),
        graph: h.graph.clone(),
        workload: Workload::Distance(set(h.roles_of(&["v1", "v2", "v3", "v4"]))),
    });
    out.push(BenchCase {
        name: "h_dist_all_branch".into(),
        graph: h.graph.clone(),
        workload: Workload::Distance(set(h.roles_of(&["v0", "u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"]))),
    });
    out
}

pub struct Timing {
    pub name: String,
    pub value: u32,
    pub reps: u32,
    pub mean: Duration,
}

/// Times every case `reps` times (at least once).
pub fn run_suite(reps: u32) -> Vec<Timing> {
    let reps = reps.max(1);
    cases()
        .into_iter()
        .map(|case| {
            let start = Instant::now();
            let mut value = 0;
            for _ in 0..reps {
                value = case.run();
            }
            Timing {
                name: case.name,
                value,
                reps,
                mean: start.elapsed() / reps,
            }
        })
        .collect()
}
