/// Hard caps on the exponential parts of the library.
///
/// Every cap fails loudly with [`crate::Error::ResourceExceeded`] or
/// [`crate::Error::Undecided`]; nothing is ever silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of intermediate rays in a double-description run.
    pub dd_max_rays: usize,
    /// Elementary steps allowed per semigroup membership query.
    pub membership_steps: u64,
    /// Maximum number of lattice points enumerated by a single call.
    pub lattice_points: u64,
    /// Maximum number of fundamental-parallelepiped points per Hilbert basis computation.
    pub parallelepiped_points: u64,
    /// Largest vertex count accepted by the exhaustive graph routines.
    pub graph_vertices: usize,
    /// Step budget for cycle searches.
    pub cycle_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dd_max_rays: 100_000,
            membership_steps: 10_000_000,
            lattice_points: 50_000_000,
            parallelepiped_points: 2_000_000,
            graph_vertices: 16,
            cycle_steps: 50_000_000,
        }
    }
}

/// Environment variable that overrides every step budget: membership steps,
/// lattice points, parallelepiped points and cycle-search steps. Size caps
/// (rays, graph vertices) are unaffected.
pub const BUDGET_ENV: &str = "CLUTTERLAB_BUDGET";

impl Limits {
    /// The same caps with every step budget set to `steps`.
    pub fn with_step_budget(self, steps: u64) -> Self {
        Limits {
            membership_steps: steps,
            lattice_points: steps,
            parallelepiped_points: steps,
            cycle_steps: steps,
            ..self
        }
    }

    /// Defaults, with the step budgets taken from `CLUTTERLAB_BUDGET` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(steps) = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
        {
            limits = limits.with_step_budget(steps);
        }
        limits
    }
}
