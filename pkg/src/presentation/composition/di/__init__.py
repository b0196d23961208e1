from .ioc import create_container

__all__ = ["create_container"]
