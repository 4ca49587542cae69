#!/usr/bin/env python3
"""
Development server runner for the HTTP surface
Run with: python dev.py
"""
import uvicorn

if __name__ == "__main__":
    uvicorn.run(
        "index:app",
        host="127.0.0.1",
        port=8000,
        reload=True,
        log_level="info"
    )
