def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def probe_grads(model, x):
    model(x).sum().backward()
    norms = [p.grad.norm() for p in model.parameters()]
    model.zero_grad()
    return norms
