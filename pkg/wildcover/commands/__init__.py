from wildcover.commands.algebra import register as register_algebra
from wildcover.commands.cover import register as register_cover
from wildcover.commands.families import register as register_families
from wildcover.commands.group import register as register_group

__all__ = ["register_algebra", "register_cover", "register_families", "register_group"]
