def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def energy(signal, kernel, enabled):
    if enabled:
        e = 0
        for t in range(len(signal)):
            e += signal[t] * kernel[t]
        return e
    return None
