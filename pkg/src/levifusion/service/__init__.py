"""FastAPI service wrapping the fusion package; the CLI is a thin client."""
