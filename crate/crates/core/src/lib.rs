pub mod cli;
pub mod complex;
pub mod models;
pub mod nerve;
pub mod preferences;
pub mod social_choice;
