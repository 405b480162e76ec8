"""Example registry, localization scans, theorem checks, fuzzing and the CLI."""
