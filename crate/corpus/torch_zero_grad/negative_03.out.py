def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def step(model, zero_grad):
    zero_grad()
    model.train()
    return model
