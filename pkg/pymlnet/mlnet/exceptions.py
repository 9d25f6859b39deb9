class MLNetError(Exception):
    """Generic exception for multi-layer network errors.

    Every subclass carries a machine-readable ``category`` next to the
    human readable message, so callers (the CLI in particular) can report
    errors without parsing text.
    """

    category = "error"

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)

    def __copy__(self):
        # Exceptions are used as immutables.
        return self

    def __deepcopy__(self, memo):
        return self


class SelfLoopError(MLNetError):
    """An edge from an actor to itself was requested."""

    category = "self-loop"

    def __init__(self, layer: str, actor: str):
        self.layer = layer
        self.actor = actor
        super().__init__(f"self-loop: actor `{actor}` cannot be linked to itself in layer `{layer}`")


class UnknownActorError(MLNetError):
    category = "unknown-actor"

    def __init__(self, ref):
        self.ref = ref
        super().__init__(f"unknown actor: {ref!r}")


class UnknownLayerError(MLNetError):
    category = "unknown-layer"

    def __init__(self, ref):
        self.ref = ref
        super().__init__(f"unknown layer: {ref!r}")


class LayerCapError(MLNetError):
    """The number of layers exceeds the configured cap."""

    category = "config"

    def __init__(self, num_layers: int, layer_cap: int):
        self.num_layers = num_layers
        self.layer_cap = layer_cap
        super().__init__(f"layer cap exceeded: {num_layers} layers, cap is {layer_cap} (raise `layer_cap` to override)")


class OptionsError(MLNetError):
    category = "config"


class NetworkFrozenError(MLNetError):
    """The network was modified after construction ended."""

    category = "frozen"

    def __init__(self):
        super().__init__("the network is frozen and can no longer be modified")


class EmptyLayerSetError(MLNetError):
    category = "empty-layerset"

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"{operation} requires a nonempty combination of layers")


class SameEndpointError(MLNetError):
    category = "same-endpoint"

    def __init__(self, actor: str):
        self.actor = actor
        super().__init__(f"source and target are the same actor `{actor}`")


class DimensionMismatchError(MLNetError):
    category = "dimension"

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"length vectors have different dimensions: {left} and {right}")


class PathCapExceededError(MLNetError):
    """Materializing the efficient paths would exceed the path cap."""

    category = "path-cap"

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"path cap exceeded: {count} efficient paths, cap is {cap}")


class UndefinedConditionalError(MLNetError):
    category = "undefined-conditional"

    def __init__(self, layer: str):
        self.layer = layer
        super().__init__(f"undefined conditional: target layer `{layer}` has no edges")


class TargetInCombinationError(MLNetError):
    category = "target-in-combination"

    def __init__(self, layer: str):
        self.layer = layer
        super().__init__(f"target layer `{layer}` must not belong to the covering combination")


class UndefinedJaccardError(MLNetError):
    category = "undefined"

    def __init__(self):
        super().__init__("undefined: both flattened edge sets are empty")


class ModularityUndefinedError(MLNetError):
    category = "modularity-undefined"

    def __init__(self):
        super().__init__("modularity undefined: the graph has no edges")


class EdgeListFormatError(MLNetError):
    """A malformed record in an edge-list or actors file."""

    category = "format"

    def __init__(self, file_name: str, line_number: int, reason: str):
        self.file_name = file_name
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"{file_name}:{line_number}: {reason}")


class InputFileError(MLNetError):
    category = "io"

    def __init__(self, file_name: str):
        self.file_name = file_name
        super().__init__(f"file not found or unreadable: `{file_name}`")
