# Cover checks, automorphism groups and explicit families
