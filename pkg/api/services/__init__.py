"""
Services package - simulation logic for the simulator
All numerical work lives here, separate from the CLI and HTTP routing
"""
