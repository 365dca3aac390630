def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
def critic_update(critic, critic_opt, value_loss):
    for p in critic.parameters():
        p.grad = None
    value_loss.backward()
    critic_opt.step()
    return value_loss.detach()
