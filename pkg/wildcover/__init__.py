# Wildcover package: Artin-Schreier covers with big p-group actions
