_base_ = "caps.json"

corpus = dict(
    count=3,
    max_size=3,
    seed=7,
)


def get_names(times):
    return [f"f{i}" for i in range(times)]


names = get_names(2)

output = dict(format="text")
