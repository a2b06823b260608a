//! Concrete Hopf algebras, groups and the worked example fixtures.

mod fixtures;
mod groups;
mod hopf;
mod unitization;

pub use fixtures::{
    example1, example1_candidate, example1_embedding, example1_phi, example2, example2_idempotent, example3, fixture,
    scalar_partial, subgroup_idempotent, translation_action, ExampleFixture, Expected, FixtureId, FixtureStructure, Origin,
    FIXTURE_IDS,
};
pub use groups::GroupTable;
pub use hopf::{function_algebra, group_algebra, group_of_grouplikes, sweedler_h4};
pub use unitization::{unitization, unitization_ideal};
