def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def prepare(model):
    model.train()
    model.requires_grad_(True)
    return model
