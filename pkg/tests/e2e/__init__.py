"""End-to-end tests for the congest-apsp CLI."""
