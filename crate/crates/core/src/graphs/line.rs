use super::{Digraph, GraphError};

/// Line digraph: one vertex per arc of `g`, numbered in the fixed arc order
/// (tail, then out-list position); arc `u->v` is joined to every arc `v->w`.
pub fn line_digraph(g: &Digraph) -> Result<Digraph, GraphError> {
    if g.arc_count() == 0 {
        return Err(GraphError::NoArcs);
    }
    let lists = g.arcs().map(|(_, v)| (0..g.out_degree(v)).map(move |pos| g.arc_index(v, pos)));
    Digraph::from_out_lists(lists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{are_isomorphic, diameter, Diameter};

    #[test]
    fn cycle_maps_to_cycle() {
        let c = Digraph::directed_cycle(3).unwrap();
        let l = line_digraph(&c).unwrap();
        assert_eq!(l.order(), 3);
        assert!(are_isomorphic(&c, &l).unwrap());
    }

    #[test]
    fn no_arcs() {
        let g = Digraph::from_out_lists(vec![Vec::<usize>::new(); 2]).unwrap();
        assert_eq!(line_digraph(&g), Err(GraphError::NoArcs));
    }

    #[test]
    fn complete_symmetric_two_vertices() {
        // K2 with loops: 0->{0,1}, 1->{0,1}; its line digraph is the de Bruijn digraph B(2,2).
        let g = Digraph::from_out_lists(vec![vec![0, 1], vec![0, 1]]).unwrap();
        let l = line_digraph(&g).unwrap();
        assert_eq!(l.to_out_lists(), vec![vec![0, 1], vec![2, 3], vec![0, 1], vec![2, 3]]);
        assert_eq!(diameter(&g), Diameter::Finite(1));
        assert_eq!(diameter(&l), Diameter::Finite(2));
    }
}
